#include "wg/weight.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wg/errors.hpp"

namespace wg {

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (size_t t = 0; t < w.a.size(); ++t) {
        if (t) s += ",";
        s += std::to_string(w.a[t]);
    }
    s += "|";
    for (size_t t = 0; t < w.b.size(); ++t) {
        if (t) s += ",";
        s += std::to_string(w.b[t]);
    }
    return s + ")";
}

Weight parse_weight(const std::string& text, const Rank& r) {
    const auto bar_pos = text.find('|');
    if (bar_pos == std::string::npos)
        throw DomainError("weight must look like a1,..,an|b1,..,bm");
    auto parse_list = [](const std::string& part) {
        std::vector<long> out;
        std::stringstream ss(part);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
        return out;
    };
    Weight w{parse_list(text.substr(0, bar_pos)), parse_list(text.substr(bar_pos + 1))};
    if (static_cast<int>(w.a.size()) != r.n || static_cast<int>(w.b.size()) != r.m)
        throw DomainError("weight has wrong length for rank (" + std::to_string(r.n) + "," +
                          std::to_string(r.m) + "): " + text);
    return w;
}

long pairing(const Weight& w, const OddRoot& alpha) {
    return w.a[alpha.i - 1] - w.b[alpha.j - 1];
}

long sum_left(const Weight& w) {
    long s = 0;
    for (long v : w.a) s += v;
    return s;
}

long sum_right(const Weight& w) {
    long s = 0;
    for (long v : w.b) s += v;
    return s;
}

Weight shift_all(const Weight& w, long t) {
    Weight out = w;
    for (long& v : out.a) v += t;
    for (long& v : out.b) v += t;
    return out;
}

Weight nu_weight(const Weight& w, long t) {
    const int n = static_cast<int>(w.a.size());
    long shift = t % n;
    if (shift < 0) shift += n;
    Weight out = w;
    for (int i = 0; i < n; ++i) out.a[(i + shift) % n] = w.a[i];
    return out;
}

Weight lambda0(const Rank& r, long k) {
    require_sv_rank(r);
    Weight w;
    for (int i = 1; i <= r.n; ++i) w.a.push_back(static_cast<long>(r.m) * (r.n - i));
    for (int j = 1; j <= r.m; ++j) w.b.push_back(static_cast<long>(r.n) * (j - 1));
    return shift_all(w, k * r.m);
}

std::optional<Weight> tau_apply(const Weight& w, const OddRoot& alpha, const Rank& r) {
    const long pair = pairing(w, {+1, alpha.i, alpha.j});
    Weight out = w;
    if (alpha.sign > 0) {
        if (pair != 0) return std::nullopt;
        out.a[alpha.i - 1] += r.n;
        out.b[alpha.j - 1] += r.m;
    } else {
        if (pair != r.n - r.m) return std::nullopt;
        out.a[alpha.i - 1] -= r.n;
        out.b[alpha.j - 1] -= r.m;
    }
    return out;
}

Weight x_of(const Partition& lambda, const Rank& r) {
    require_sv_rank(r);
    Weight w = lambda0(r);
    const std::vector<int> d = dual(lambda, r);
    for (int i = 1; i <= r.n; ++i) w.a[i - 1] += static_cast<long>(r.n) * lambda.row(i);
    for (int j = 1; j <= r.m; ++j) w.b[j - 1] += static_cast<long>(r.m) * d[j - 1];
    return w;
}

Weight x_class(const RotClass& c, const Rank& r) {
    return shift_all(nu_weight(x_of(c.rep, r), -c.k), c.k * r.m);
}

long sv_degree(const Weight& w, const Rank& r) {
    const Weight base = lambda0(r);
    const long ldiff = sum_left(w) - sum_left(base);
    const long rdiff = sum_right(w) - sum_right(base);
    if (ldiff % r.n != 0 || rdiff % r.m != 0 || ldiff / r.n != rdiff / r.m)
        throw DomainError("weight is off the orbit lattice: " + weight_str(w));
    return ldiff / r.n;
}

bool residues_complete(const Weight& w, const Rank& r) {
    auto covers = [](const std::vector<long>& v, long mod) {
        std::set<long> seen;
        for (long x : v) seen.insert(((x % mod) + mod) % mod);
        return static_cast<long>(seen.size()) == mod;
    };
    return covers(w.a, r.n) && covers(w.b, r.m);
}

AugMatrix a_matrix(const Weight& w) {
    AugMatrix m;
    m.left = w.a;
    m.top = w.b;
    m.core.resize(w.a.size(), std::vector<long>(w.b.size(), 0));
    for (size_t i = 0; i < w.a.size(); ++i)
        for (size_t j = 0; j < w.b.size(); ++j) m.core[i][j] = w.a[i] - w.b[j];
    return m;
}

AugMatrix rotate_matrix(const AugMatrix& m) {
    AugMatrix out = m;
    std::rotate(out.left.rbegin(), out.left.rbegin() + 1, out.left.rend());
    std::rotate(out.core.rbegin(), out.core.rbegin() + 1, out.core.rend());
    return out;
}

std::vector<OddRoot> zero_cells(const AugMatrix& m) {
    std::vector<OddRoot> out;
    for (size_t i = 0; i < m.core.size(); ++i)
        for (size_t j = 0; j < m.core[i].size(); ++j)
            if (m.core[i][j] == 0) out.push_back(pos_root(static_cast<int>(i) + 1,
                                                          static_cast<int>(j) + 1));
    return out;
}

std::string render_aug(const AugMatrix& m, bool zeros_only) {
    size_t width = 1;
    auto fit = [&width](long v) { width = std::max(width, std::to_string(v).size()); };
    for (long v : m.left) fit(v);
    for (long v : m.top) fit(v);
    if (!zeros_only)
        for (const auto& row : m.core)
            for (long v : row) fit(v);
    auto cell = [&](const std::string& s) {
        return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
    };
    std::ostringstream os;
    os << cell("") << " ║";
    for (long v : m.top) os << ' ' << cell(std::to_string(v));
    os << '\n';
    os << std::string(width, '=') << "=╬";
    for (size_t j = 0; j < m.top.size(); ++j) os << '=' << std::string(width, '=');
    os << '\n';
    for (size_t i = 0; i < m.core.size(); ++i) {
        os << cell(std::to_string(m.left[i])) << " ║";
        for (long v : m.core[i]) {
            if (zeros_only && v != 0)
                os << ' ' << cell("·");
            else
                os << ' ' << cell(std::to_string(v));
        }
        os << '\n';
    }
    return os.str();
}

Partition a_of(const Weight& w, const Rank& r) {
    require_sv_rank(r);
    long deg = 0;
    try {
        deg = sv_degree(w, r);
    } catch (const DomainError&) {
        throw NoSupportingPath("weight is off the x-image (border sums): " + weight_str(w));
    }
    if (deg < 0 || deg > rect_area(r))
        throw NoSupportingPath("weight degree " + std::to_string(deg) +
                               " is outside [0, mn]: " + weight_str(w));

    std::vector<OddRoot> zeros;
    for (int i = 1; i <= r.n; ++i)
        for (int j = 1; j <= r.m; ++j)
            if (pairing(w, pos_root(i, j)) == 0) zeros.push_back(pos_root(i, j));

    auto inside = [](const Partition& p, const OddRoot& z) { return z.j <= p.row(z.i); };

    std::vector<Partition> candidates;
    for (const Partition& mu : all_partitions(r)) {
        if (mu.size() != deg) continue;
        bool ok = true;
        for (const OddRoot& z : zeros) {
            if (is_outer_corner(mu, z.i, z.j, r)) continue;
            if (!inside(mu, z)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        // Every outer corner of a candidate must actually be a zero.
        for (const OddRoot& oc : corners(mu, r).outer)
            if (pairing(w, oc) != 0) {
                ok = false;
                break;
            }
        if (ok) candidates.push_back(mu);
    }

    if (candidates.empty())
        throw NoSupportingPath("no supporting path for " + weight_str(w));
    if (candidates.size() == 1) return candidates.front();
    // Tie: keep the containment-largest path if there is one, otherwise
    // report the ambiguity (off-image input).
    for (const Partition& big : candidates) {
        bool top = true;
        for (const Partition& other : candidates)
            if (!contains(big, other)) {
                top = false;
                break;
            }
        if (top) return big;
    }
    throw NoSupportingPath("ambiguous supporting paths for " + weight_str(w));
}

}  // namespace wg
