#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koppel/form.hpp"
#include "koppel/parse.hpp"

using namespace koppel;

namespace {
const VarSpace vs2(2);

RationalFn R(const std::string& s) { return RationalFn(parse_poly(vs2, s)); }
FormExpr dz(int j) { return FormExpr::gen(vs2, GenBlock::DZeta, j); }
FormExpr dzb(int j) { return FormExpr::gen(vs2, GenBlock::DZetaBar, j); }

/* the weight alpha for O(1): z.zetabar/|zeta|^2 - dbar(zetabar.dzeta / 2pii|zeta|^2) */
FormExpr alpha_form() {
    MultiPoly n2 = norm_sq(vs2, Family::Zeta);
    FormExpr a = FormExpr::scalar(RationalFn(dot(vs2, Family::Z, Family::ZetaBar), n2));
    FormExpr lead(vs2);
    for (int j = 0; j <= 2; ++j)
        lead.add(1u << gen_id(vs2, GenBlock::DZeta, j),
                 RationalFn(MultiPoly::var(vs2, Family::ZetaBar, j), MultiPoly::pi2i(vs2) * n2));
    return a - dbar(lead);
}
} // namespace

TEST_CASE("wedge signs") {
    CHECK(wedge(dz(0), dz(1)).equals(-wedge(dz(1), dz(0))));
    CHECK(wedge(dz(0), dz(0)).is_zero());
    FormExpr w = wedge(dz(1), wedge(dzb(0), dz(0)));
    CHECK(wedge(wedge(dz(1), dzb(0)), dz(0)).equals(w));
    /* even forms commute */
    FormExpr e1 = wedge(dz(0), dzb(1)), e2 = wedge(dz(1), dzb(2));
    CHECK(wedge(e1, e2).equals(wedge(e2, e1)));
}

TEST_CASE("contraction is an antiderivation") {
    VectorFieldExpr v = VectorFieldExpr::from_block(vs2, GenBlock::DZeta,
                                                    {R("z0^2"), R("w1"), R("1")});
    FormExpr a = wedge(dz(0), dzb(1)) + FormExpr::scalar(R("z1"));
    FormExpr b = wedge(dz(1), dz(2)) + FormExpr::scalar(R("Z0"));
    /* a is even here, so no sign on the second term */
    FormExpr lhs = contract(wedge(a, b), v);
    FormExpr odd = dz(1) * R("z0");
    FormExpr rhs = wedge(contract(a, v), b) + wedge(a, contract(b, v));
    CHECK(lhs.equals(rhs));
    FormExpr lhs2 = contract(wedge(odd, b), v);
    FormExpr rhs2 = wedge(contract(odd, v), b) - wedge(odd, contract(b, v));
    CHECK(lhs2.equals(rhs2));
}

TEST_CASE("dbar squares to zero") {
    FormExpr a = FormExpr::scalar(RationalFn(parse_poly(vs2, "Z0^2*z1"),
                                             norm_sq(vs2, Family::Zeta))) +
                 dzb(1) * R("Z0*z2") + wedge(dz(0), dzb(2)) * R("Z1^3");
    CHECK(dbar(dbar(a)).is_zero());
}

TEST_CASE("interpolation differential squares to zero") {
    FormExpr a = dz(0) * RationalFn(parse_poly(vs2, "Z0"), norm_sq(vs2, Family::Zeta)) +
                 wedge(dz(1), dzb(0)) * R("z2*Z1");
    CHECK(nabla_eta(nabla_eta(a)).is_zero());
    /* and it is an antiderivation on scalars times forms */
    RationalFn s = RationalFn(parse_poly(vs2, "Z2"), norm_sq(vs2, Family::Zeta));
    FormExpr lhs = nabla_eta(a * s);
    FormExpr rhs = nabla_eta(a) * s - wedge(dbar(FormExpr::scalar(s)), a);
    CHECK(lhs.equals(rhs));
}

TEST_CASE("alpha is a projective form of weight (-1,1)") {
    FormExpr alpha = alpha_form();
    std::string why;
    CHECK(is_projective(alpha, -1, 1, &why));
    CHECK_FALSE(is_projective(alpha, 0, 1));
    CHECK_FALSE(is_projective(dz(0), 0, 0));
    /* nabla-closed: this is what makes it a weight */
    CHECK(nabla_eta(alpha).is_zero());
}

TEST_CASE("projective volume form and division") {
    FormExpr om = omega_form(vs2);
    CHECK(om.max_degree() == 2);
    FormExpr theta = dzb(0) * RationalFn(parse_poly(vs2, "Z1"), norm_sq(vs2, Family::Zeta)) +
                     FormExpr::scalar(R("z2"));
    FormExpr a = wedge(theta, om);
    CHECK(theta_divide(a).equals(theta));
    CHECK_THROWS(theta_divide(dz(0)));
}

TEST_CASE("numeric form evaluation") {
    Point pt = Point::make(vs2);
    pt.set_conj_pair(vs2, Family::Zeta, {{1.0, 0.5}, {-0.2, 0.8}, {0.0, 1.5}});
    pt.set_conj_pair(vs2, Family::Z, {{0.4, 0.0}, {1.0, -1.0}, {2.0, 0.3}});
    FormExpr a = dz(1) * R("z0*Z2");
    auto vals = eval_form(a, pt);
    std::complex<double> z0(1.0, 0.5), z2(0.0, 1.5);
    uint32_t m = 1u << gen_id(vs2, GenBlock::DZeta, 1);
    CHECK(std::abs(vals.at(m) - z0 * std::conj(z2)) < 1e-14);
}
