#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wg/affine.hpp"
#include "wg/rank.hpp"
#include "wg/root.hpp"

namespace wg {

// Exact rational with int64 parts; values here are tiny (half-integers).
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n) {}  // NOLINT: implicit by intent
    Rat(std::int64_t n, std::int64_t d);

    bool operator==(const Rat&) const = default;
    bool is_integer() const { return den == 1; }
};

Rat operator+(const Rat& x, const Rat& y);
Rat operator-(const Rat& x, const Rat& y);
Rat operator*(const Rat& x, const Rat& y);
Rat operator-(const Rat& x);
std::string rat_str(const Rat& x);

// Weight with rational coefficients on (eps, delta, delta-bar) plus the value
// on the central element.
struct FormWeight {
    std::vector<Rat> eps;
    std::vector<Rat> del;
    Rat dbar;
    Rat level;

    bool operator==(const FormWeight&) const = default;
};

FormWeight zero_form(const Rank& r);
FormWeight form_of_affine(const AffineRoot& x, const Rank& r);
FormWeight form_sub(const FormWeight& u, const FormWeight& v);

// Signature (+1^n, -1^m); delta-bar and the level are ignored.
Rat bilinear(const FormWeight& u, const FormWeight& v);

// rho = rho_0 - rho_1 for the distinguished system.
FormWeight rho(const Rank& r);
FormWeight two_rho1(const Rank& r);
// rho_1 of the Levi with odd roots {eps_i - delta_j : i >= p, j <= q}.
FormWeight rho_levi(int p, int q, const Rank& r);
FormWeight negate_form(const FormWeight& u);
FormWeight with_level(FormWeight u, Rat level);

// Reflected global roots along a path of positive labels out of the
// distinguished Borel; all entries are distinct.
using Chain = std::vector<AffineRoot>;
Chain chain_betas(const std::vector<OddRoot>& labels, const Rank& r);

// (lam - sum beta_i, alpha) + k * lam(c), where the last chain entry is
// k*dbar + alpha.  Zero means the final reflected vector generates a proper
// submodule.
Rat completeness_criterion(const FormWeight& lam, const Chain& chain, const Rank& r);

// (lam - beta, beta) + level(beta) * lam(c) == 0 for isotropic beta.
bool singular_check(const FormWeight& lam, const AffineRoot& beta, const Rank& r);

}  // namespace wg
