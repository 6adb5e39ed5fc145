#ifndef KOPPEL_HEFER_HPP
#define KOPPEL_HEFER_HPP

#include "koppel/form.hpp"
#include "koppel/weights.hpp"

namespace koppel {

/// Scalar Hefer data for one homogeneous polynomial f of degree d:
/// components h_l(w, z) with 2pii sum_l h_l (w_l - z_l) = f(w) - f(z).
/// hnum_l = 2pii h_l is stored (polynomial, degree d-1).
struct HeferScalar {
    VarSpace vs;
    MultiPoly f;  /* in the zeta family */
    long degree = 0;
    std::vector<MultiPoly> hnum;  /* in (w, z) */

    RationalFn h(int l) const { return RationalFn(hnum[l], MultiPoly::pi2i(vs)); }
    /// h as the one-form sum_l h_l dw_l.
    FormExpr tilde() const;
};

/// Telescoping construction in ascending variable order; the defining identity
/// is checked exactly before returning.
HeferScalar hefer_decompose(const MultiPoly& f);

/// Build a HeferScalar from externally supplied components (paper-style
/// overrides); throws if the identity fails for both f and -f, and records
/// which sign matched.
HeferScalar hefer_from_components(const MultiPoly& f, const std::vector<MultiPoly>& hnum,
                                  int* matched_sign = nullptr);

/// Contraction with 2pii sum_l (w_l - z_l) d/d(dw_l).
FormExpr delta_wz(const FormExpr& a);

/// The tau* substitution w_j -> alpha zeta_j (even-form power expansion),
/// dw_j -> gamma^alpha_j. Coefficients must have w-free denominators.
FormExpr tau_star(const FormExpr& a);
FormExpr tau_star(const HeferScalar& h);

struct KoszulData {
    VarSpace vs;
    std::vector<MultiPoly> fs;
    std::vector<long> degs;
    long kappa0 = 0;
    std::vector<int> a_vars;       /* fiber variables for the Jacobian minor */
    std::vector<RationalFn> sigma; /* minimal-norm dual section, symbolic */
};

KoszulData koszul_data(const std::vector<MultiPoly>& fs);

/// sigma at a point; throws when the point is on X (all f_j below floor).
std::vector<std::complex<double>> eval_sigma(const KoszulData& data, const Point& pt,
                                             double floor = 1e-12);

/// Hefer morphism components for the Koszul complex.  For T a subset of S,
/// H(S, T) = +/- alpha^{kappa0 - sum_{j in S} d_j} ^ prod_{j in S \ T} tau* h_j.
struct KoszulHefer {
    KoszulData data;
    std::vector<HeferScalar> hs;
    std::vector<FormExpr> taustar_h;

    FormExpr component(const std::vector<int>& S, const std::vector<int>& T) const;
    FormExpr H0(const std::vector<int>& S) const { return component(S, {}); }
};

KoszulHefer koszul_hefer(const KoszulData& data);

/// Exact check of the morphism relation at (k,l) = (1,0) for every generator:
/// nabla_eta H^0_{j} = H^0_0 f_j(zeta) - f_j(z) H^1_{jj}.
WeightCheck verify_koszul_hefer(const KoszulHefer& kh);

struct DegreeLedger {
    long kappa0 = 0;     /* sum of the d_j */
    long kappa_s = 0;    /* s + N - kappa0 */
    long kappa_q = 0;    /* max Koszul twist at levels <= N - q */
    long reg = 0;        /* sum (d_j - 1) + 1 for complete intersections */
    bool threshold = false; /* s >= kappa0 - N */
};

DegreeLedger degree_ledger(const KoszulData& data, long s, long q);

} // namespace koppel

#endif
