#ifndef KOPPEL_WEIGHTS_HPP
#define KOPPEL_WEIGHTS_HPP

#include "koppel/form.hpp"

namespace koppel {

/// Cauchy-Leray type form b with delta_eta b = 1 off the diagonal.
FormExpr build_b(const VarSpace& vs);
/// B = sum_{k=1..N} b ^ (dbar b)^{k-1}, so nabla_eta B = 1 - (dbar b)^N.
FormExpr build_B(const VarSpace& vs);

struct WeightCheck {
    bool ok = false;
    std::string detail;
};

/// Exact proof that nabla_eta B = 1 off the diagonal, with every identity
/// cleared of denominators so only polynomial arithmetic is involved.  This is
/// what makes N = 3 tractable.
WeightCheck verify_interp_B(const VarSpace& vs);

/// Weight alpha for O(1): z.zetabar/|zeta|^2 - dbar(zetabar.dzeta/(2pii |zeta|^2)).
FormExpr build_alpha(const VarSpace& vs);
/// tau = dzbar.dzeta / (2pii |z|^2).
FormExpr build_tau(const VarSpace& vs);
/// Weight beta for O(-1): 2pii delta_zeta(delta_zbar tau ^ sum_k tau^k).
FormExpr build_beta(const VarSpace& vs);

/// gamma_j with nabla_eta gamma_j = 2pii (z_j - alpha zeta_j).
std::vector<FormExpr> build_gamma_alpha(const VarSpace& vs);
/// gamma_j with nabla_eta gamma_j = beta z_j - zeta_j.
std::vector<FormExpr> build_gamma_beta(const VarSpace& vs);

/// alpha^m via the binomial expansion in (scalar, two-form) parts; memoized
/// per (N, m), write-once.
const FormExpr& alpha_power(const VarSpace& vs, long m);

/// Certify g as a weight of bidegree (p_zeta, p_z): nabla_eta g = 0, each
/// component descends projectively, and the scalar part is 1 on the diagonal.
WeightCheck verify_weight(const FormExpr& g, long p_zeta, long p_z);

/// Substitute z -> zeta, zbar -> zetabar in all coefficients (masks untouched).
FormExpr restrict_diagonal_coeffs(const FormExpr& g);

} // namespace koppel

#endif
