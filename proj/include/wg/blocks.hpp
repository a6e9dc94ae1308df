#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wg/partition.hpp"
#include "wg/rank.hpp"
#include "wg/weight.hpp"

namespace wg {

// Column runs r_1..r_k (summing to m) and row runs s_1..s_k (summing to n)
// describing a staircase of rectangles.
struct BlockSpec {
    std::vector<int> rr;
    std::vector<int> ss;
};

BlockSpec make_block_spec(std::vector<int> rr, std::vector<int> ss, const Rank& r);

// Partial sums a_p = sum_{i<=p} (n r_i - m s_i); a_0 = a_k = 0.
std::vector<long> block_offsets(const BlockSpec& spec, const Rank& r);

// Weight with ^R blocks [a_{i-1}, step n]^{r_i} and ^L blocks descending
// [a_i + m(s_i - 1) .. a_i].
Weight block_weight(const BlockSpec& spec, const Rank& r);

// The staircase partition: part r_1+..+r_i with multiplicity s_i.
Partition block_partition(const BlockSpec& spec, const Rank& r);

// Orbit membership certificate used for the staircase weights: the entries of
// block_weight match those of x(block_partition) - mn, side by side, as
// multisets.
bool block_weight_on_orbit(const BlockSpec& spec, const Rank& r);

// One tau move on a W-canonical weight: add or subtract (n, m) on a pair.
struct Move {
    int sign = +1;  // +1: a_i = b_j pair raised; -1: a_i - b_j = n - m lowered
    long a_value = 0;
    long b_value = 0;
};

struct SearchPath {
    std::vector<Move> moves;
    std::vector<Weight> states;  // canonical forms, source first
};

// Canonical form under S_n x S_m: a sorted descending, b ascending.
Weight w_canonical(const Weight& w);

// BFS over canonical forms from source to target; moves explore every value
// pair in both directions, degrees clamped to [deg(src) - bound, deg(src) +
// bound].  Returns the move witness or nothing.
std::optional<SearchPath> orbit_search(const Weight& source, const Weight& target,
                                       const Rank& r, long bound);

}  // namespace wg
