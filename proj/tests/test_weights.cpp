#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "koppel/weights.hpp"

using namespace koppel;

namespace {
RationalFn poly(const VarSpace& vs, Family f, int j) {
    return RationalFn(MultiPoly::var(vs, f, j));
}
} // namespace

TEST_CASE("b is normalized against the interpolation field") {
    for (int N : {1, 2}) {
        VarSpace vs(N);
        FormExpr b = build_b(vs);
        CHECK(contract(b, VectorFieldExpr::eta(vs)).equals(FormExpr::one(vs)));
        CHECK(is_projective(b, 0, 0));
    }
}

TEST_CASE("dbar b vanishes on the line") {
    VarSpace vs(1);
    CHECK(dbar(build_b(vs)).is_zero());
}

TEST_CASE("top power of dbar b vanishes identically") {
    VarSpace vs(2);
    FormExpr db = dbar(build_b(vs));
    CHECK_FALSE(db.is_zero());
    CHECK(wedge(db, db).is_zero());
}

TEST_CASE("nabla_eta B = 1 off the diagonal") {
    for (int N : {1, 2}) {
        VarSpace vs(N);
        FormExpr B = build_B(vs);
        CHECK(nabla_eta(B).equals(FormExpr::one(vs)));
        CHECK(is_projective(B, 0, 0));
    }
}

TEST_CASE("closed form of B matches its definition") {
    VarSpace vs(2);
    FormExpr b = build_b(vs);
    FormExpr db = dbar(b);
    CHECK(build_B(vs).equals(b + wedge(b, db)));
}

TEST_CASE("denominator-cleared interpolation identities") {
    for (int N : {1, 2}) {
        WeightCheck w = verify_interp_B(VarSpace(N));
        INFO(w.detail);
        CHECK(w.ok);
    }
}

TEST_CASE("alpha and beta are weights") {
    for (int N : {1, 2}) {
        VarSpace vs(N);
        WeightCheck wa = verify_weight(build_alpha(vs), -1, 1);
        INFO(wa.detail);
        CHECK(wa.ok);
        WeightCheck wb = verify_weight(build_beta(vs), 1, -1);
        INFO(wb.detail);
        CHECK(wb.ok);
    }
}

TEST_CASE("alpha powers match the binomial cache") {
    VarSpace vs(2);
    FormExpr alpha = build_alpha(vs);
    CHECK(alpha_power(vs, 0).equals(FormExpr::one(vs)));
    CHECK(alpha_power(vs, 1).equals(alpha));
    CHECK(alpha_power(vs, 3).equals(wedge(alpha, wedge(alpha, alpha))));
    /* cache is write-once: repeated lookups return the same object */
    CHECK(&alpha_power(vs, 3) == &alpha_power(vs, 3));
}

TEST_CASE("gamma against alpha") {
    VarSpace vs(2);
    FormExpr alpha = build_alpha(vs);
    auto gam = build_gamma_alpha(vs);
    RationalFn tpi(MultiPoly::pi2i(vs));
    for (int j = 0; j <= 2; ++j) {
        FormExpr want = FormExpr::scalar(poly(vs, Family::Z, j) * tpi) -
                        alpha * (poly(vs, Family::Zeta, j) * tpi);
        CHECK(nabla_eta(gam[j]).equals(want));
    }
}

TEST_CASE("gamma against beta") {
    VarSpace vs(2);
    FormExpr beta = build_beta(vs);
    auto gam = build_gamma_beta(vs);
    for (int j = 0; j <= 2; ++j) {
        FormExpr want = beta * poly(vs, Family::Z, j) -
                        FormExpr::scalar(poly(vs, Family::Zeta, j));
        CHECK(nabla_eta(gam[j]).equals(want));
    }
}
