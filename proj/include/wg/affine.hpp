#pragma once

#include <string>
#include <vector>

#include "wg/rank.hpp"
#include "wg/root.hpp"
#include "wg/rotclass.hpp"
#include "wg/shuffle.hpp"

namespace wg {

// Root of the affinization: level * delta-bar plus an integer vector over the
// basis (eps_1..eps_n, delta_1..delta_m).  delta-bar pairs to zero with
// everything; the finite pairing has signature (+1^n, -1^m).
struct AffineRoot {
    long level = 0;
    std::vector<int> fin;

    bool operator==(const AffineRoot&) const = default;
    bool operator<(const AffineRoot& o) const {
        if (level != o.level) return level < o.level;
        return fin < o.fin;
    }
};

AffineRoot zero_affine_root(const Rank& r);
AffineRoot delta_bar(const Rank& r);
AffineRoot eps_basis(int i, const Rank& r);
AffineRoot del_basis(int j, const Rank& r);
AffineRoot affine_of(const OddRoot& alpha, const Rank& r, long level = 0);

AffineRoot add(const AffineRoot& x, const AffineRoot& y);
AffineRoot sub(const AffineRoot& x, const AffineRoot& y);
AffineRoot negate(const AffineRoot& x);

long pairing_fin(const AffineRoot& x, const AffineRoot& y, const Rank& r);
bool is_odd_root(const AffineRoot& x, const Rank& r);       // support in both blocks
bool is_isotropic(const AffineRoot& x, const Rank& r);

// Finite part as a signed box root; throws DomainError when the root is not
// of the form +-(eps_i - delta_j).
OddRoot box_of(const AffineRoot& x, const Rank& r);

std::string affine_root_str(const AffineRoot& x, const Rank& r);

// Ordered simple-root list; first entry is the leftmost Dynkin-Kac node.
using SimpleRootList = std::vector<AffineRoot>;

std::string root_list_str(const SimpleRootList& roots, const Rank& r);

// Simple roots of b(sigma): consecutive one-line pairs, eps_{j'} read as
// delta_j.  Length m+n-1, all levels zero.
SimpleRootList finite_simple_roots(const Shuffle& sigma, const Rank& r);

AffineRoot sum_roots(const SimpleRootList& roots, const Rank& r);
// alpha_0 = delta-bar minus the sum of the list (levels included).
AffineRoot extending_root(const SimpleRootList& roots, const Rank& r);
// [alpha_0, roots...], length r+1.
SimpleRootList extend_list(const SimpleRootList& roots, const Rank& r);
// Drop the last entry of an extended list (node deletion).
SimpleRootList rotate_extended(const SimpleRootList& extended);

// List surgeries for passing between g(k) and g(k +- 1); mutually inverse.
SimpleRootList rotate_list_up(const SimpleRootList& roots, const Rank& r);
SimpleRootList rotate_list_down(const SimpleRootList& roots, const Rank& r);

// Odd reflection at an isotropic entry: the entry flips sign, neighbours with
// nonzero pairing absorb it, levels ride along.
SimpleRootList odd_reflect_seq(const SimpleRootList& roots, int idx, const Rank& r);

// Per-node parity flags, true = odd.
std::vector<bool> diagram_nodes(const SimpleRootList& roots, const Rank& r);
std::string dynkin_str(const SimpleRootList& roots, const Rank& r);
std::string extended_dynkin_str(const SimpleRootList& extended, const Rank& r);

// Borel name (sigma, k) together with its global simple-root list, moved
// around by odd reflections and node rotations.
class BorelWalker {
  public:
    static BorelWalker distinguished(const Rank& r);

    const Rank& rank() const { return rank_; }
    const Shuffle& sigma() const { return sigma_; }
    long k() const { return k_; }
    const SimpleRootList& roots() const { return roots_; }
    RotClass rot_class() const;

    // Node rotations; preconditions are the bar/underbar domains.
    void rotate_up();
    void rotate_down();
    void goto_rotation(long target_k);
    // Reflect at the local box root (signed); returns the global root that
    // was reflected.
    AffineRoot reflect_box(const OddRoot& box);
    // Apply a class-level label: pick the applicable member, rotate to it,
    // reflect.  Returns the reflected global root.
    AffineRoot apply_label(const OddRoot& alpha);
    // Rotate up until the underlying diagram is reduced.
    void normalize();

  private:
    BorelWalker(Rank r, Shuffle s, long k, SimpleRootList roots)
        : rank_(r), sigma_(std::move(s)), k_(k), roots_(std::move(roots)) {}

    Rank rank_;
    Shuffle sigma_;
    long k_;
    SimpleRootList roots_;
};

// Global simple-root list of b(sigma, k), computed by walking from the
// distinguished Borel of g(0) through box moves and node rotations.
SimpleRootList global_seq(const Shuffle& sigma, long k, const Rank& r);
// Local names: apply nu^k to eps indices and drop levels.
SimpleRootList local_seq(const SimpleRootList& global, long k, const Rank& r);

// Closed forms used as oracles against global_seq.
SimpleRootList distinguished_list(const Rank& r);
SimpleRootList antidistinguished_list(const Rank& r);
// Simple roots of the Borel of (m^j, 0^{n-j}) at rotation 0, 0 <= j <= n.
SimpleRootList staircase_list(int j, const Rank& r);
// Distinguished list of g(j), 0 <= j < n (j = 0 is the plain one).
SimpleRootList rotated_distinguished_list(int j, const Rank& r);
// Distinguished / anti-distinguished lists of g(k*n), any integer k.
SimpleRootList period_distinguished_list(long k, const Rank& r);
SimpleRootList period_antidistinguished_list(long k, const Rank& r);
// Extended list shared by the n+1 names of the full-rectangle class.
SimpleRootList upsilon_list(const Rank& r);
// Distinguished list of g(j+n) built from the anti-distinguished list of g(j).
SimpleRootList antidist_to_dist(const SimpleRootList& anti, const Rank& r);

}  // namespace wg
