#pragma once

#include <numeric>
#include <string>

#include "wg/errors.hpp"

namespace wg {

// Rectangle size: n rows (eps indices), m columns (delta indices).
struct Rank {
    int n = 1;
    int m = 1;

    bool operator==(const Rank&) const = default;
};

inline bool coprime(const Rank& r) { return std::gcd(r.n, r.m) == 1; }

inline long rect_area(const Rank& r) { return static_cast<long>(r.n) * r.m; }

// Diagram-level operations accept m == n (needed for gl(n|n)).
inline void require_diagram_rank(const Rank& r) {
    if (r.n < 1 || r.m < r.n)
        throw RankError("rank requires m >= n >= 1, got n=" + std::to_string(r.n) +
                        " m=" + std::to_string(r.m));
}

// The integer weight action needs m > n and gcd(m, n) = 1.
inline void require_sv_rank(const Rank& r) {
    require_diagram_rank(r);
    if (r.m <= r.n)
        throw RankError("weight action requires m > n, got n=" + std::to_string(r.n) +
                        " m=" + std::to_string(r.m));
    if (!coprime(r))
        throw RankError("weight action requires gcd(m, n) = 1, got n=" + std::to_string(r.n) +
                        " m=" + std::to_string(r.m));
}

}  // namespace wg
