#include "wg/verma.hpp"

#include <numeric>

#include "wg/errors.hpp"

namespace wg {

Rat::Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rat operator+(const Rat& x, const Rat& y) { return Rat(x.num * y.den + y.num * x.den, x.den * y.den); }
Rat operator-(const Rat& x, const Rat& y) { return Rat(x.num * y.den - y.num * x.den, x.den * y.den); }
Rat operator*(const Rat& x, const Rat& y) { return Rat(x.num * y.num, x.den * y.den); }
Rat operator-(const Rat& x) { return Rat(-x.num, x.den); }

std::string rat_str(const Rat& x) {
    if (x.den == 1) return std::to_string(x.num);
    return std::to_string(x.num) + "/" + std::to_string(x.den);
}

FormWeight zero_form(const Rank& r) {
    return FormWeight{std::vector<Rat>(r.n), std::vector<Rat>(r.m), Rat(0), Rat(0)};
}

FormWeight form_of_affine(const AffineRoot& x, const Rank& r) {
    FormWeight f = zero_form(r);
    for (int t = 0; t < r.n; ++t) f.eps[t] = Rat(x.fin[t]);
    for (int t = 0; t < r.m; ++t) f.del[t] = Rat(x.fin[r.n + t]);
    f.dbar = Rat(x.level);
    return f;
}

FormWeight form_sub(const FormWeight& u, const FormWeight& v) {
    FormWeight out = u;
    for (size_t t = 0; t < out.eps.size(); ++t) out.eps[t] = out.eps[t] - v.eps[t];
    for (size_t t = 0; t < out.del.size(); ++t) out.del[t] = out.del[t] - v.del[t];
    out.dbar = out.dbar - v.dbar;
    return out;
}

Rat bilinear(const FormWeight& u, const FormWeight& v) {
    Rat s(0);
    for (size_t t = 0; t < u.eps.size(); ++t) s = s + u.eps[t] * v.eps[t];
    for (size_t t = 0; t < u.del.size(); ++t) s = s - u.del[t] * v.del[t];
    return s;
}

FormWeight rho(const Rank& r) {
    FormWeight f = zero_form(r);
    for (int i = 1; i <= r.n; ++i) f.eps[i - 1] = Rat(r.n + 1 - 2 * i - r.m, 2);
    for (int j = 1; j <= r.m; ++j) f.del[j - 1] = Rat(r.m + 1 - 2 * j + r.n, 2);
    return f;
}

FormWeight two_rho1(const Rank& r) {
    FormWeight f = zero_form(r);
    for (int i = 0; i < r.n; ++i) f.eps[i] = Rat(r.m);
    for (int j = 0; j < r.m; ++j) f.del[j] = Rat(-r.n);
    return f;
}

FormWeight rho_levi(int p, int q, const Rank& r) {
    if (p < 1 || p > r.n || q < 1 || q > r.m)
        throw DomainError("rho_levi needs 1 <= p <= n, 1 <= q <= m");
    FormWeight f = zero_form(r);
    for (int i = p; i <= r.n; ++i) f.eps[i - 1] = Rat(q, 2);
    for (int j = 1; j <= q; ++j) f.del[j - 1] = Rat(-(r.n + 1 - p), 2);
    return f;
}

FormWeight negate_form(const FormWeight& u) {
    FormWeight out = u;
    for (Rat& c : out.eps) c = -c;
    for (Rat& c : out.del) c = -c;
    out.dbar = -out.dbar;
    out.level = -out.level;
    return out;
}

FormWeight with_level(FormWeight u, Rat level) {
    u.level = level;
    return u;
}

Chain chain_betas(const std::vector<OddRoot>& labels, const Rank& r) {
    BorelWalker w = BorelWalker::distinguished(r);
    Chain out;
    out.reserve(labels.size());
    for (const OddRoot& alpha : labels) {
        if (alpha.sign <= 0)
            throw DomainError("chains follow positive labels only, got " + root_str(alpha));
        out.push_back(w.apply_label(alpha));
        for (size_t t = 0; t + 1 < out.size(); ++t)
            if (out[t] == out.back())
                throw DomainError("chain repeats the root " + affine_root_str(out.back(), r));
    }
    return out;
}

Rat completeness_criterion(const FormWeight& lam, const Chain& chain, const Rank& r) {
    if (chain.empty()) throw EmptyChain("criterion needs a nonempty chain");
    const AffineRoot& last = chain.back();
    AffineRoot total = zero_affine_root(r);
    for (const AffineRoot& b : chain) total = add(total, b);
    AffineRoot alpha = last;
    alpha.level = 0;
    const FormWeight shifted = form_sub(lam, form_of_affine(total, r));
    return bilinear(shifted, form_of_affine(alpha, r)) + Rat(last.level) * lam.level;
}

bool singular_check(const FormWeight& lam, const AffineRoot& beta, const Rank& r) {
    if (!is_isotropic(beta, r))
        throw NotIsotropic(affine_root_str(beta, r) + " is not isotropic");
    AffineRoot fin = beta;
    fin.level = 0;
    const FormWeight shifted = form_sub(lam, form_of_affine(fin, r));
    const Rat value = bilinear(shifted, form_of_affine(fin, r)) + Rat(beta.level) * lam.level;
    return value == Rat(0);
}

}  // namespace wg
