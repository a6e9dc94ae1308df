#pragma once

#include <string>
#include <vector>

#include "wg/partition.hpp"
#include "wg/rank.hpp"
#include "wg/root.hpp"

namespace wg {

// Permutation of {1..n, 1'..m'} in one-line notation, with both families
// increasing as subsequences.  Symbols are encoded as 1..n (unprimed) and
// n+j (primed j).  There are C(m+n, n) shuffles.
struct Shuffle {
    std::vector<int> seq;

    bool operator==(const Shuffle&) const = default;
    bool operator<(const Shuffle& o) const { return seq < o.seq; }
};

inline bool sym_primed(int sym, const Rank& r) { return sym > r.n; }
inline int sym_value(int sym, const Rank& r) { return sym_primed(sym, r) ? sym - r.n : sym; }
inline int primed_sym(int j, const Rank& r) { return r.n + j; }

std::string sym_str(int sym, const Rank& r);
std::string shuffle_str(const Shuffle& s, const Rank& r);

bool is_valid_shuffle(const Shuffle& s, const Rank& r);
Shuffle make_shuffle(std::vector<int> seq, const Rank& r);
Shuffle parse_shuffle(const std::string& text, const Rank& r);

// sigma = (1, .., n, 1', .., m'): the distinguished Borel, zeta = empty.
Shuffle identity_shuffle(const Rank& r);
// sigma = (1', .., m', 1, .., n): the anti-distinguished Borel, zeta = full.
Shuffle antidistinguished_shuffle(const Rank& r);

std::vector<Shuffle> all_shuffles(const Rank& r);

// Lattice-path bijection with partitions in R: step k is Down when the k-th
// symbol is unprimed, Right otherwise; the diagram is the region below the
// path.
Partition zeta(const Shuffle& s, const Rank& r);
Shuffle zeta_inv(const Partition& p, const Rank& r);

// sigma admits the odd reflection r_{+a} (a = eps_i - delta_j) when i
// immediately precedes j'; r_{-a} when j' immediately precedes i.
bool reflection_defined(const Shuffle& s, const OddRoot& alpha, const Rank& r);
Shuffle odd_reflect_shuffle(const Shuffle& s, const OddRoot& alpha, const Rank& r);

// Row-deletion on the shuffle side: defined when the last symbol is n.
bool bar_shuffle_defined(const Shuffle& s, const Rank& r);
Shuffle bar_shuffle(const Shuffle& s, const Rank& r);
bool underbar_shuffle_defined(const Shuffle& s, const Rank& r);
Shuffle underbar_shuffle(const Shuffle& s, const Rank& r);

// Text grid of signed roots split by the lattice path: boxes inside
// zeta(sigma) read delta_j - eps_i, boxes above the path read eps_i - delta_j.
std::string delta_epsilon_render(const Shuffle& s, const Rank& r);

}  // namespace wg
