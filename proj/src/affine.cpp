#include "wg/affine.hpp"

#include <algorithm>
#include <sstream>

#include "wg/errors.hpp"

namespace wg {

AffineRoot zero_affine_root(const Rank& r) {
    return AffineRoot{0, std::vector<int>(r.n + r.m, 0)};
}

AffineRoot delta_bar(const Rank& r) {
    AffineRoot x = zero_affine_root(r);
    x.level = 1;
    return x;
}

AffineRoot eps_basis(int i, const Rank& r) {
    AffineRoot x = zero_affine_root(r);
    x.fin[i - 1] = 1;
    return x;
}

AffineRoot del_basis(int j, const Rank& r) {
    AffineRoot x = zero_affine_root(r);
    x.fin[r.n + j - 1] = 1;
    return x;
}

AffineRoot affine_of(const OddRoot& alpha, const Rank& r, long level) {
    AffineRoot x = sub(eps_basis(alpha.i, r), del_basis(alpha.j, r));
    if (alpha.sign < 0) x = negate(x);
    x.level = level;
    return x;
}

AffineRoot add(const AffineRoot& x, const AffineRoot& y) {
    AffineRoot out = x;
    out.level += y.level;
    for (size_t t = 0; t < out.fin.size(); ++t) out.fin[t] += y.fin[t];
    return out;
}

AffineRoot sub(const AffineRoot& x, const AffineRoot& y) { return add(x, negate(y)); }

AffineRoot negate(const AffineRoot& x) {
    AffineRoot out = x;
    out.level = -out.level;
    for (int& c : out.fin) c = -c;
    return out;
}

long pairing_fin(const AffineRoot& x, const AffineRoot& y, const Rank& r) {
    long s = 0;
    for (int t = 0; t < r.n; ++t) s += static_cast<long>(x.fin[t]) * y.fin[t];
    for (int t = r.n; t < r.n + r.m; ++t) s -= static_cast<long>(x.fin[t]) * y.fin[t];
    return s;
}

bool is_odd_root(const AffineRoot& x, const Rank& r) {
    bool eps = false, del = false;
    for (int t = 0; t < r.n; ++t) eps |= x.fin[t] != 0;
    for (int t = r.n; t < r.n + r.m; ++t) del |= x.fin[t] != 0;
    return eps && del;
}

bool is_isotropic(const AffineRoot& x, const Rank& r) {
    return is_odd_root(x, r) && pairing_fin(x, x, r) == 0;
}

OddRoot box_of(const AffineRoot& x, const Rank& r) {
    int i = 0, j = 0, sign = 0;
    for (int t = 0; t < r.n + r.m; ++t) {
        if (x.fin[t] == 0) continue;
        if (std::abs(x.fin[t]) != 1) throw DomainError("not a box root");
        if (t < r.n) {
            if (i) throw DomainError("not a box root");
            i = t + 1;
            sign = x.fin[t];
        } else {
            if (j) throw DomainError("not a box root");
            j = t - r.n + 1;
            if (x.fin[t] != -sign) throw DomainError("not a box root");
        }
    }
    if (!i || !j) throw DomainError("not a box root");
    return {sign, i, j};
}

std::string affine_root_str(const AffineRoot& x, const Rank& r) {
    // Positive terms first, so delta_1 - eps_1 prints that way round.
    std::vector<std::pair<long, std::string>> terms;
    if (x.level != 0) terms.emplace_back(x.level, "δ̅");
    for (int t = 0; t < r.n; ++t)
        if (x.fin[t] != 0) terms.emplace_back(x.fin[t], "ε" + std::to_string(t + 1));
    for (int t = 0; t < r.m; ++t)
        if (x.fin[r.n + t] != 0)
            terms.emplace_back(x.fin[r.n + t], "δ" + std::to_string(t + 1));
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return (a.first > 0) > (b.first > 0); });
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [coeff, name] : terms) {
        if (coeff > 0 && !first) os << "+";
        if (coeff == -1)
            os << "−";
        else if (coeff != 1)
            os << coeff;
        os << name;
        first = false;
    }
    return os.str();
}

std::string root_list_str(const SimpleRootList& roots, const Rank& r) {
    std::string s = "(";
    for (size_t t = 0; t < roots.size(); ++t) {
        if (t) s += ", ";
        s += affine_root_str(roots[t], r);
    }
    return s + ")";
}

SimpleRootList finite_simple_roots(const Shuffle& sigma, const Rank& r) {
    auto basis = [&](int sym) {
        return sym_primed(sym, r) ? del_basis(sym - r.n, r) : eps_basis(sym, r);
    };
    SimpleRootList out;
    for (size_t t = 0; t + 1 < sigma.seq.size(); ++t)
        out.push_back(sub(basis(sigma.seq[t]), basis(sigma.seq[t + 1])));
    return out;
}

AffineRoot sum_roots(const SimpleRootList& roots, const Rank& r) {
    AffineRoot s = zero_affine_root(r);
    for (const AffineRoot& x : roots) s = add(s, x);
    return s;
}

AffineRoot extending_root(const SimpleRootList& roots, const Rank& r) {
    return sub(delta_bar(r), sum_roots(roots, r));
}

SimpleRootList extend_list(const SimpleRootList& roots, const Rank& r) {
    SimpleRootList out{extending_root(roots, r)};
    out.insert(out.end(), roots.begin(), roots.end());
    return out;
}

SimpleRootList rotate_extended(const SimpleRootList& extended) {
    return SimpleRootList(extended.begin(), extended.end() - 1);
}

SimpleRootList rotate_list_up(const SimpleRootList& roots, const Rank& r) {
    SimpleRootList out{extending_root(roots, r)};
    out.insert(out.end(), roots.begin(), roots.end() - 1);
    return out;
}

SimpleRootList rotate_list_down(const SimpleRootList& roots, const Rank& r) {
    SimpleRootList out(roots.begin() + 1, roots.end());
    out.push_back(extending_root(roots, r));
    return out;
}

SimpleRootList odd_reflect_seq(const SimpleRootList& roots, int idx, const Rank& r) {
    if (idx < 0 || idx >= static_cast<int>(roots.size()))
        throw DomainError("reflection index out of range");
    const AffineRoot beta = roots[idx];
    if (!is_isotropic(beta, r))
        throw NotIsotropic("entry " + std::to_string(idx) + " = " +
                           affine_root_str(beta, r) + " is not isotropic");
    SimpleRootList out;
    out.reserve(roots.size());
    for (int t = 0; t < static_cast<int>(roots.size()); ++t) {
        if (t == idx)
            out.push_back(negate(beta));
        else if (pairing_fin(roots[t], beta, r) != 0)
            out.push_back(add(roots[t], beta));
        else
            out.push_back(roots[t]);
    }
    return out;
}

std::vector<bool> diagram_nodes(const SimpleRootList& roots, const Rank& r) {
    std::vector<bool> odd;
    odd.reserve(roots.size());
    for (const AffineRoot& x : roots) odd.push_back(is_odd_root(x, r));
    return odd;
}

std::string dynkin_str(const SimpleRootList& roots, const Rank& r) {
    std::ostringstream os;
    const std::vector<bool> odd = diagram_nodes(roots, r);
    for (size_t t = 0; t < roots.size(); ++t) {
        if (t) os << "──";
        os << (odd[t] ? "⊗" : "○");
    }
    os << '\n';
    for (size_t t = 0; t < roots.size(); ++t)
        os << "  " << t + 1 << ": " << affine_root_str(roots[t], r) << '\n';
    return os.str();
}

std::string extended_dynkin_str(const SimpleRootList& extended, const Rank& r) {
    // Extended diagrams are cycles; print the adjacency list node by node.
    std::ostringstream os;
    const std::vector<bool> odd = diagram_nodes(extended, r);
    const size_t len = extended.size();
    for (size_t t = 0; t < len; ++t) {
        os << (odd[t] ? "⊗" : "○") << t << ": " << affine_root_str(extended[t], r)
           << "  ~ {" << (t + len - 1) % len << ", " << (t + 1) % len << "}\n";
    }
    return os.str();
}

RotClass BorelWalker::rot_class() const { return canonicalize(zeta(sigma_, rank_), k_, rank_); }

BorelWalker BorelWalker::distinguished(const Rank& r) {
    Shuffle id = identity_shuffle(r);
    SimpleRootList roots = finite_simple_roots(id, r);
    return BorelWalker(r, std::move(id), 0, std::move(roots));
}

void BorelWalker::rotate_up() {
    if (!bar_shuffle_defined(sigma_, rank_))
        throw DomainError("node rotation needs sigma(m') = n, got " +
                          shuffle_str(sigma_, rank_));
    roots_ = rotate_list_up(roots_, rank_);
    sigma_ = bar_shuffle(sigma_, rank_);
    ++k_;
}

void BorelWalker::rotate_down() {
    if (!underbar_shuffle_defined(sigma_, rank_))
        throw DomainError("inverse rotation needs sigma(1) = 1, got " +
                          shuffle_str(sigma_, rank_));
    roots_ = rotate_list_down(roots_, rank_);
    sigma_ = underbar_shuffle(sigma_, rank_);
    --k_;
}

void BorelWalker::goto_rotation(long target_k) {
    while (k_ < target_k) rotate_up();
    while (k_ > target_k) rotate_down();
}

AffineRoot BorelWalker::reflect_box(const OddRoot& box) {
    if (!reflection_defined(sigma_, box, rank_))
        throw NotSimple(root_str(box) + " is not simple for " + shuffle_str(sigma_, rank_));
    // The list entry sits at the position of the earlier of the two symbols.
    const int first_sym = box.sign > 0 ? box.i : primed_sym(box.j, rank_);
    int idx = -1;
    for (size_t t = 0; t < sigma_.seq.size(); ++t)
        if (sigma_.seq[t] == first_sym) idx = static_cast<int>(t);
    const AffineRoot beta = roots_[idx];
    roots_ = odd_reflect_seq(roots_, idx, rank_);
    sigma_ = odd_reflect_shuffle(sigma_, box, rank_);
    return beta;
}

AffineRoot BorelWalker::apply_label(const OddRoot& alpha) {
    for (const auto& [mu, j] : members(rot_class(), rank_)) {
        const OddRoot box = nu_root(alpha, j, rank_.n);
        const bool applies = alpha.sign > 0 ? is_outer_corner(mu, box.i, box.j, rank_)
                                            : is_inner_corner(mu, box.i, box.j, rank_);
        if (!applies) continue;
        goto_rotation(j);
        return reflect_box(box);
    }
    throw DomainError("label " + root_str(alpha) + " does not apply at " +
                      class_key(rot_class()));
}

void BorelWalker::normalize() {
    while (bar_shuffle_defined(sigma_, rank_)) rotate_up();
}

SimpleRootList global_seq(const Shuffle& sigma, long k, const Rank& r) {
    const Partition target = zeta(sigma, r);
    BorelWalker w = BorelWalker::distinguished(r);
    if (k >= 0) {
        for (long j = 0; j < k; ++j) {
            // Fill the bottom row, then trade it for a rotation.
            for (int c = 1; c <= r.m; ++c) w.reflect_box(pos_root(r.n, c));
            w.rotate_up();
        }
    } else {
        for (long j = 0; j > k; --j) {
            // Rotation down re-creates a full bottom row; remove it again.
            w.rotate_down();
            for (int c = r.m; c >= 1; --c) w.reflect_box({-1, r.n, c});
        }
    }
    for (int p = 1; p <= r.n; ++p) {
        const int i = r.n + 1 - p;
        for (int c = 1; c <= target.parts[p - 1]; ++c) w.reflect_box(pos_root(i, c));
    }
    if (!(w.sigma() == sigma) || w.k() != k)
        throw DomainError("walk did not land on " + shuffle_str(sigma, r) + "@" +
                          std::to_string(k));
    return w.roots();
}

SimpleRootList local_seq(const SimpleRootList& global, long k, const Rank& r) {
    SimpleRootList out;
    out.reserve(global.size());
    for (const AffineRoot& x : global) {
        AffineRoot loc = zero_affine_root(r);
        long shift = k % r.n;
        if (shift < 0) shift += r.n;
        for (int t = 0; t < r.n; ++t)
            loc.fin[(t + shift) % r.n] = x.fin[t];  // nu^k on eps indices
        for (int t = r.n; t < r.n + r.m; ++t) loc.fin[t] = x.fin[t];
        out.push_back(std::move(loc));
    }
    return out;
}

SimpleRootList distinguished_list(const Rank& r) {
    return finite_simple_roots(identity_shuffle(r), r);
}

SimpleRootList antidistinguished_list(const Rank& r) {
    return finite_simple_roots(antidistinguished_shuffle(r), r);
}

SimpleRootList staircase_list(int j, const Rank& r) {
    // (Xi_j, beta_{n-j}+..+beta_n, nabla, -(beta_{n+1-j}+..+beta_r), Psi_j)
    // over the distinguished roots beta; first two absent at j = n, last two
    // at j = 0.
    const SimpleRootList beta = distinguished_list(r);
    auto beta_sum = [&](int lo, int hi) {  // 1-based inclusive
        AffineRoot s = zero_affine_root(r);
        for (int t = lo; t <= hi; ++t) s = add(s, beta[t - 1]);
        return s;
    };
    SimpleRootList out;
    for (int t = 1; t <= r.n - j - 1; ++t) out.push_back(beta[t - 1]);  // Xi_j
    if (j < r.n) out.push_back(beta_sum(r.n - j, r.n));
    for (int t = r.n + 1; t <= r.n + r.m - 1; ++t) out.push_back(beta[t - 1]);  // nabla
    if (j > 0) out.push_back(negate(beta_sum(r.n + 1 - j, r.n + r.m - 1)));
    for (int t = r.n + 1 - j; t <= r.n - 1; ++t) out.push_back(beta[t - 1]);  // Psi_j
    return out;
}

SimpleRootList rotated_distinguished_list(int j, const Rank& r) {
    if (j == 0) return distinguished_list(r);
    // (Psi_j, dbar + eps_n - eps_1, Xi_j, eps_{n-j} - delta_1, nabla)
    SimpleRootList out;
    for (int i = r.n + 1 - j; i <= r.n - 1; ++i)
        out.push_back(sub(eps_basis(i, r), eps_basis(i + 1, r)));
    out.push_back(add(delta_bar(r), sub(eps_basis(r.n, r), eps_basis(1, r))));
    for (int i = 1; i <= r.n - j - 1; ++i)
        out.push_back(sub(eps_basis(i, r), eps_basis(i + 1, r)));
    out.push_back(sub(eps_basis(r.n - j, r), del_basis(1, r)));
    for (int j2 = 1; j2 <= r.m - 1; ++j2)
        out.push_back(sub(del_basis(j2, r), del_basis(j2 + 1, r)));
    return out;
}

SimpleRootList period_distinguished_list(long k, const Rank& r) {
    SimpleRootList out;
    for (int i = 1; i <= r.n - 1; ++i) out.push_back(sub(eps_basis(i, r), eps_basis(i + 1, r)));
    AffineRoot odd = sub(eps_basis(r.n, r), del_basis(1, r));
    odd.level = k;
    out.push_back(odd);
    for (int j = 1; j <= r.m - 1; ++j) out.push_back(sub(del_basis(j, r), del_basis(j + 1, r)));
    return out;
}

SimpleRootList period_antidistinguished_list(long k, const Rank& r) {
    SimpleRootList out;
    for (int j = 1; j <= r.m - 1; ++j) out.push_back(sub(del_basis(j, r), del_basis(j + 1, r)));
    AffineRoot odd = sub(del_basis(r.m, r), eps_basis(1, r));
    odd.level = -k;
    out.push_back(odd);
    for (int i = 1; i <= r.n - 1; ++i) out.push_back(sub(eps_basis(i, r), eps_basis(i + 1, r)));
    return out;
}

SimpleRootList upsilon_list(const Rank& r) {
    return extend_list(antidistinguished_list(r), r);
}

SimpleRootList antidist_to_dist(const SimpleRootList& anti, const Rank& r) {
    // (gamma_{m+1}, .., gamma_r, dbar - sum, gamma_1, .., gamma_{m-1})
    const int len = static_cast<int>(anti.size());
    SimpleRootList out;
    for (int t = r.m; t < len; ++t) out.push_back(anti[t]);
    out.push_back(extending_root(anti, r));
    for (int t = 0; t + 1 < r.m; ++t) out.push_back(anti[t]);
    return out;
}

}  // namespace wg
