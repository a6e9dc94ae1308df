#pragma once

#include <string>
#include <vector>

#include "wg/rank.hpp"
#include "wg/root.hpp"

namespace wg {

// Young diagram inside the m x n rectangle R, stored as weakly decreasing
// parts lambda_1 >= ... >= lambda_n >= 0 with lambda_1 <= m.  Row eps_i of R
// holds lambda_{n+1-i} boxes, so the largest part is the bottom row.
struct Partition {
    std::vector<int> parts;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts < o.parts; }

    long size() const {
        long s = 0;
        for (int p : parts) s += p;
        return s;
    }
    // Part in row eps_i (top-down row index).
    int row(int i) const { return parts[static_cast<int>(parts.size()) - i]; }
};

Partition make_partition(std::vector<int> parts, const Rank& r);
Partition empty_partition(const Rank& r);
bool is_valid_partition(const Partition& p, const Rank& r);

// The partition (m, 1^{n-1}).
Partition bold_lambda(const Rank& r);

// Componentwise containment mu <= lambda.
bool contains(const Partition& lambda, const Partition& mu);

// Dual partition: entry j counts parts >= j, for j in [m].
std::vector<int> dual(const Partition& p, const Rank& r);

struct Corners {
    std::vector<OddRoot> inner;  // positive roots whose box can be removed
    std::vector<OddRoot> outer;  // positive roots whose box can be added
};

bool is_inner_corner(const Partition& p, int i, int j, const Rank& r);
bool is_outer_corner(const Partition& p, int i, int j, const Rank& r);
Corners corners(const Partition& p, const Rank& r);

// Add (+alpha at an outer corner) or remove (-alpha at an inner corner) one
// box.  Throws NotACorner when the precondition fails.
Partition toggle_box(const Partition& p, const OddRoot& alpha, const Rank& r);

// bar drops the largest part (requires lambda_1 = m); underbar prepends a
// full part m (requires lambda_n = 0).  Mutually inverse where defined.
Partition bar(const Partition& p, const Rank& r);
Partition underbar(const Partition& p, const Rank& r);
bool bar_defined(const Partition& p, const Rank& r);
bool underbar_defined(const Partition& p, const Rank& r);

struct DiagramFlags {
    bool reduced = false;           // lambda_1 < m
    bool strongly_reduced = false;  // lambda_n = dual_m = 0
    bool top_full = false;          // lambda_1 = m
    bool contains_bold = false;     // (m, 1^{n-1}) <= lambda
};
DiagramFlags classify(const Partition& p, const Rank& r);

// All partitions in R, lexicographically increasing.  C(m+n, n) of them.
std::vector<Partition> all_partitions(const Rank& r);
// All partitions with parts <= bound (used for reduced diagrams).
std::vector<Partition> all_partitions_bounded(const Rank& r, int bound);

std::string partition_str(const Partition& p);

}  // namespace wg
