#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wg/partition.hpp"
#include "wg/rank.hpp"
#include "wg/root.hpp"
#include "wg/rotclass.hpp"

namespace wg {

// Integer weight (a_1..a_n | b_1..b_m), meaning sum a_i eps_i - sum b_j delta_j.
struct Weight {
    std::vector<long> a;
    std::vector<long> b;

    bool operator==(const Weight&) const = default;
    bool operator<(const Weight& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

std::string weight_str(const Weight& w);
Weight parse_weight(const std::string& text, const Rank& r);

// (Lambda, eps_i - delta_j) = a_i - b_j.
long pairing(const Weight& w, const OddRoot& alpha);

long sum_left(const Weight& w);
long sum_right(const Weight& w);

// Adds t to every entry (translation by t * str).
Weight shift_all(const Weight& w, long t);

// nu rotates the a-entries one step (a_1..a_n) -> (a_n, a_1, ..); power t.
Weight nu_weight(const Weight& w, long t);

// Base point Lambda_0 = (m(n-1),..,m,0 | 0,n,..,n(m-1)), optionally shifted
// by k*m on every entry.
Weight lambda0(const Rank& r, long k = 0);

// tau_{+a} needs a_i = b_j and adds (n, m) to the pair; tau_{-a} needs
// a_i - b_j = n - m and subtracts.  Returns nothing off the domain.
std::optional<Weight> tau_apply(const Weight& w, const OddRoot& alpha, const Rank& r);

// x(lambda): a_i = m(n-i) + n*lambda_{n+1-i}, b_j = n(j-1) + m*dual_j.
Weight x_of(const Partition& lambda, const Rank& r);

// x[lambda, k] = nu^{-k}(x(lambda)) + k*m on every entry.
Weight x_class(const RotClass& c, const Rank& r);

// Degree along the orbit: (|^L Lambda| - |^L Lambda_0|) / n.  Checks the
// right border agrees; throws DomainError off the lattice.
long sv_degree(const Weight& w, const Rank& r);

// Entries of a (resp. b) hit every residue mod n (resp. mod m).
bool residues_complete(const Weight& w, const Rank& r);

// Difference matrix A(Lambda)_{ij} = a_i - b_j bordered by ^L and ^R.
struct AugMatrix {
    std::vector<long> left;               // a_1..a_n, top row first
    std::vector<long> top;                // b_1..b_m
    std::vector<std::vector<long>> core;  // n rows, m columns
};

AugMatrix a_matrix(const Weight& w);
// Move the bottom row (and its left-border entry) to the top; equals
// a_matrix(nu(Lambda)).
AugMatrix rotate_matrix(const AugMatrix& m);
std::vector<OddRoot> zero_cells(const AugMatrix& m);
std::string render_aug(const AugMatrix& m, bool zeros_only);

// Left inverse of x_of on its image: the partition under the zero-supporting
// path.  The degree of Lambda pins |lambda|; every zero must then be an outer
// corner or lie inside the diagram.  Throws NoSupportingPath off the image.
Partition a_of(const Weight& w, const Rank& r);

}  // namespace wg
