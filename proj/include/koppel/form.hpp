#ifndef KOPPEL_FORM_HPP
#define KOPPEL_FORM_HPP

#include "koppel/multipoly.hpp"

#include <cstdint>
#include <optional>

namespace koppel {

/// Generator blocks for the exterior algebra over the cone coordinates.
/// Generators are globally ordered dzeta < dzetabar < dzbar < dw and stored as
/// bits block*(N+1)+j of a mask; all signs come from sorting parity.
enum class GenBlock : int { DZeta = 0, DZetaBar = 1, DZBar = 2, DW = 3 };

inline int gen_id(const VarSpace& vs, GenBlock b, int j) {
    return static_cast<int>(b) * (vs.N + 1) + j;
}
uint32_t block_mask(const VarSpace& vs, GenBlock b);
int block_count(const VarSpace& vs, uint32_t mask, GenBlock b);
/// Variable differentiated/substituted by generator g (dzeta_j -> zeta_j etc).
int gen_var(const VarSpace& vs, int g);

/// Exterior form with rational-function coefficients, mixed degree allowed.
struct FormExpr {
    VarSpace vs;
    std::map<uint32_t, RationalFn> comps;

    FormExpr() = default;
    explicit FormExpr(VarSpace v) : vs(v) {}

    static FormExpr zero(const VarSpace& vs) { return FormExpr(vs); }
    static FormExpr scalar(RationalFn c);
    static FormExpr scalar(MultiPoly p) { return scalar(RationalFn(std::move(p))); }
    static FormExpr one(const VarSpace& vs) { return scalar(RationalFn::one(vs)); }
    static FormExpr gen(const VarSpace& vs, GenBlock b, int j);

    void add(uint32_t mask, const RationalFn& c);

    bool is_zero() const;
    /// True degree-by-degree equality of coefficients (cross-multiplied).
    bool equals(const FormExpr& o) const;

    FormExpr operator+(const FormExpr& o) const;
    FormExpr operator-(const FormExpr& o) const;
    FormExpr operator-() const;
    FormExpr operator*(const RationalFn& c) const;
    FormExpr operator*(const GaussianRational& c) const;
    FormExpr& operator+=(const FormExpr& o);

    /// Components whose mask has exactly the given generator counts
    /// (-1 = any count in that block).
    FormExpr extract(int n_dzeta, int n_dzetabar = -1, int n_dzbar = -1, int n_dw = -1) const;
    /// Component of total exterior degree d.
    FormExpr degree_part(int d) const;
    int max_degree() const;

    std::string str() const;
};

/// (0,1)-type vector field sum_g comps[g] d/d(gen g) used for contractions.
struct VectorFieldExpr {
    VarSpace vs;
    std::map<int, RationalFn> comps;

    VectorFieldExpr() = default;
    explicit VectorFieldExpr(VarSpace v) : vs(v) {}

    /// Field with one coefficient per generator of a block.
    static VectorFieldExpr from_block(const VarSpace& vs, GenBlock b,
                                      const std::vector<RationalFn>& coeffs);
    /// 2*pi*i sum_j z_j d/d(dzeta_j), the interpolation field.
    static VectorFieldExpr eta(const VarSpace& vs);
};

FormExpr wedge(const FormExpr& a, const FormExpr& b);
FormExpr wedge_pow(const FormExpr& a, int k);
FormExpr contract(const FormExpr& a, const VectorFieldExpr& v);
/// Antiholomorphic differential: d/d(zetabar) and/or d/d(zbar) terms.
FormExpr dbar(const FormExpr& a, bool zeta_side = true, bool z_side = true);
/// delta_eta - dbar.
FormExpr nabla_eta(const FormExpr& a);

/// Check the form descends to P^N x P^N with values in O(p_zeta) x O(p_z):
/// per-component weight bookkeeping plus vanishing of the three Euler
/// contractions. Forms touching the w family are rejected.
bool is_projective(const FormExpr& a, long p_zeta, long p_z, std::string* why = nullptr);

/// Omega = sum_j (-1)^j zeta_j dzeta_0 ^ ... omit j ... ^ dzeta_N.
FormExpr omega_form(const VarSpace& vs);
/// Solve a = theta ^ omega_form for theta free of dzeta, dividing through the
/// dual-frame coefficient at index j (default N); verifies the product exactly.
FormExpr theta_divide(const FormExpr& a, int j = -1);

std::map<uint32_t, std::complex<double>> eval_form(const FormExpr& a, const Point& p,
                                                   double pole_floor = 1e-300);

/// Parity of the permutation sorting the concatenation of two disjoint masks.
int wedge_sign(uint32_t ma, uint32_t mb);

} // namespace koppel

#endif
