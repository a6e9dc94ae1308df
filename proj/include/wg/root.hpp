#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "wg/rank.hpp"

namespace wg {

// Signed isotropic root sign * (eps_i - delta_j), 1 <= i <= n, 1 <= j <= m.
struct OddRoot {
    int sign = +1;  // +1 or -1
    int i = 1;
    int j = 1;

    bool operator==(const OddRoot&) const = default;
    bool operator<(const OddRoot& o) const {
        return std::tie(sign, i, j) < std::tie(o.sign, o.i, o.j);
    }

    OddRoot negated() const { return {-sign, i, j}; }
    bool positive() const { return sign > 0; }
};

inline OddRoot pos_root(int i, int j) { return {+1, i, j}; }

// nu shifts eps indices cyclically: nu(eps_i - delta_j) = eps_{i+1} - delta_j,
// indices mod n in {1..n}.  Works for any integer power t.
inline OddRoot nu_root(const OddRoot& a, long t, int n) {
    long raw = (a.i - 1 + t) % n;
    if (raw < 0) raw += n;
    return {a.sign, static_cast<int>(raw + 1), a.j};
}

inline std::string root_str(const OddRoot& a) {
    std::string body = "ε" + std::to_string(a.i) + "−δ" + std::to_string(a.j);
    if (a.sign > 0) return body;
    return "δ" + std::to_string(a.j) + "−ε" + std::to_string(a.i);
}

inline std::vector<OddRoot> all_positive_roots(const Rank& r) {
    std::vector<OddRoot> out;
    out.reserve(rect_area(r));
    for (int i = 1; i <= r.n; ++i)
        for (int j = 1; j <= r.m; ++j) out.push_back(pos_root(i, j));
    return out;
}

}  // namespace wg
