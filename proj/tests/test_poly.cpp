#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koppel/multipoly.hpp"
#include "koppel/parse.hpp"

#include <nlohmann/json.hpp>

using namespace koppel;

namespace {
const VarSpace vs2(2);

MultiPoly P(const std::string& s, Family lower = Family::Zeta) { return parse_poly(vs2, s, lower); }
} // namespace

TEST_CASE("parser basics") {
    MultiPoly a = P("z0^2 + 2/3*z1*Z0 - i*w2");
    CHECK(a.terms.size() == 3);
    CHECK(a.degree_in(vs2.id(Family::Zeta, 0)) == 2);
    CHECK(a.degree_in(vs2.id(Family::ZetaBar, 0)) == 1);
    CHECK(a.degree_in(vs2.id(Family::W, 2)) == 1);

    CHECK(P("(z0+z1)^2") == P("z0^2+2*z0*z1+z1^2"));
    CHECK(P("-3/7") == MultiPoly::constant(vs2, GaussianRational(Rational(-3, 7))));
    CHECK(P("i*i") == MultiPoly::constant(vs2, GaussianRational(-1)));
    CHECK_THROWS(P("z0 +"));
    CHECK_THROWS(P("z5"));
    CHECK_THROWS(P("z0 ^ -2"));
}

TEST_CASE("ring identities") {
    MultiPoly a = P("z0^2 - i*z1 + 3*Z2"), b = P("w1 + 2/5*z0*Z0");
    MultiPoly c = P("z2 - 7*i");
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK((a - a).is_zero());
}

TEST_CASE("conjugation") {
    MultiPoly a = P("z0^2*Z1 + i*z2 - 1/2");
    CHECK(a.conj().conj() == a);
    MultiPoly b = P("w0 - i*Z0");
    CHECK((a * b).conj() == a.conj() * b.conj());
    /* the 2*pi*i unit is purely imaginary */
    MultiPoly t = MultiPoly::pi2i(vs2);
    CHECK(t.conj() == -t);
    CHECK((t * t).conj() == t * t);
}

TEST_CASE("derivative") {
    int z0 = vs2.id(Family::Zeta, 0);
    CHECK(P("z0^3").derivative(z0) == P("3*z0^2"));
    MultiPoly a = P("z0^2*z1 + Z0"), b = P("z0*w1 - i");
    CHECK((a * b).derivative(z0) == a.derivative(z0) * b + a * b.derivative(z0));
    CHECK(P("Z0^4").derivative(z0).is_zero());
}

TEST_CASE("substitute kills the cuspidal cubic along its parametrization") {
    MultiPoly f = P("z1^3 - z2^2*z0");
    std::map<int, MultiPoly> par = {
        {vs2.id(Family::Zeta, 0), P("w0^3")},
        {vs2.id(Family::Zeta, 1), P("w1^2*w0")},
        {vs2.id(Family::Zeta, 2), P("w1^3")},
    };
    CHECK(f.substitute(par).is_zero());

    MultiPoly fermat = P("z0^3 + z1^3 + z2^3");
    CHECK_FALSE(fermat.substitute(par).is_zero());
}

TEST_CASE("homogeneity") {
    MultiPoly n2 = norm_sq(vs2, Family::Zeta);
    CHECK(n2.homogeneous_weight(Family::Zeta) == 1);
    CHECK(n2.homogeneous_weight(Family::ZetaBar) == 1);
    CHECK(n2.homogeneous_weight(Family::Z) == 0);
    CHECK_FALSE(P("z0 + z0^2").homogeneous_weight(Family::Zeta).has_value());

    /* z.zetabar / |zeta|^2, weight (-1,0) upstairs and (1,0) downstairs */
    RationalFn a(dot(vs2, Family::Z, Family::ZetaBar), n2);
    auto wz = a.combined_weight(true);
    auto wb = a.combined_weight(false);
    REQUIRE(wz.has_value());
    REQUIRE(wb.has_value());
    CHECK(wz->first == -1);
    CHECK(wz->second == 0);
    CHECK(wb->first == 1);
    CHECK(wb->second == 0);
}

TEST_CASE("rational function equality and arithmetic") {
    RationalFn a(P("z0^2 - z1^2"), P("z0 - z1"));
    RationalFn b(P("z0 + z1"));
    CHECK(a.equals(b));
    CHECK_FALSE(a.equals(RationalFn(P("z0"))));
    RationalFn c(P("1"), P("z0"));
    RationalFn d(P("1"), P("z1"));
    CHECK((c + d).equals(RationalFn(P("z0 + z1"), P("z0*z1"))));
    CHECK((c * d).equals(RationalFn(P("1"), P("z0*z1"))));
    CHECK((c / d).equals(RationalFn(P("z1"), P("z0"))));
    CHECK((c - c).is_zero());
}

TEST_CASE("quotient derivative") {
    int z0 = vs2.id(Family::Zeta, 0);
    RationalFn q(P("z1"), P("z0"));
    CHECK(q.derivative(z0).equals(RationalFn(P("-z1"), P("z0^2"))));
    CHECK(q.derivative(vs2.id(Family::Zeta, 2)).is_zero());
}

TEST_CASE("exact division and pseudo remainder") {
    int w0 = vs2.id(Family::W, 0);
    MultiPoly num = P("w0^3") - P("z0^3");
    MultiPoly div = P("w0 - z0");
    CHECK(num.divide_exact_linear(div, w0) == P("w0^2 + w0*z0 + z0^2"));
    CHECK_THROWS(P("w0^2 + 1").divide_exact_linear(div, w0));

    int z1 = vs2.id(Family::Zeta, 1);
    MultiPoly f = P("z1^3 - z2^2*z0");
    CHECK(P("z1^3").pseudo_remainder(f, z1) == P("z2^2*z0"));
    CHECK(f.pseudo_remainder(f, z1).is_zero());
    CHECK((P("z0*z2") * f).pseudo_remainder(f, z1).is_zero());
}

TEST_CASE("numeric evaluation") {
    Point pt = Point::make(vs2);
    pt.set_conj_pair(vs2, Family::Zeta, {{0.3, -1.1}, {2.0, 0.7}, {-0.4, 0.05}});
    std::complex<double> z0(0.3, -1.1), z1(2.0, 0.7);
    MultiPoly p = P("z0^2*z1 - i*Z1");
    CHECK(std::abs(p.eval(pt) - (z0 * z0 * z1 - std::complex<double>(0, 1) * std::conj(z1))) <
          1e-14);

    RationalFn q(P("z0"), P("z1"));
    CHECK(std::abs(q.eval(pt) - z0 / z1) < 1e-14);

    /* the 2*pi*i unit evaluates to 2*pi*i */
    MultiPoly t = MultiPoly::pi2i(vs2);
    CHECK(std::abs(t.eval(pt) - std::complex<double>(0, 2 * 3.14159265358979323846)) < 1e-12);
}

TEST_CASE("exact evaluation") {
    MultiPoly p = P("z0^2 + 2*z1");
    std::vector<GaussianRational> point(vs2.nvars(), GaussianRational(0));
    point[vs2.id(Family::Zeta, 0)] = GaussianRational(Rational(1, 2));
    point[vs2.id(Family::Zeta, 1)] = GaussianRational(3);
    CHECK(p.eval_exact(point) == GaussianRational(Rational(25, 4)));
}

TEST_CASE("sum with denominator grouping") {
    std::vector<RationalFn> parts = {
        RationalFn(P("z0"), P("z1")),
        RationalFn(P("z1"), P("z1")),
        RationalFn(P("1"), P("z0*z1")),
    };
    RationalFn s = sum_rationals(vs2, parts);
    CHECK(s.equals(RationalFn(P("z0^2 + z0*z1 + 1"), P("z0*z1"))));
}

TEST_CASE("json serialization") {
    nlohmann::json j = poly_to_json(P("z0^2 - 1/3*i*Z1"));
    CHECK(j["N"] == 2);
    CHECK(j["terms"].size() == 2);
    bool saw = false;
    for (const auto& t : j["terms"])
        if (t["monomial"].contains("zeta0")) {
            CHECK(t["monomial"]["zeta0"] == 2);
            CHECK(t["coeff_re"] == "1");
            saw = true;
        }
    CHECK(saw);
}
