#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace modo;
using namespace modo::test;

TEST_CASE("BC membership") {
    Session akns = load_session(akns_config);
    CurveReport r = spectral_curve(akns.get("L"), akns.get("B"));
    CHECK(is_bc(r.curve, akns.get("L"), akns.get("B")));

    Session ex72 = load_session(ex72_config);
    CHECK(!is_bc(lm_embed(bp("mu - 2*i*lambda^2"), ex72.spec), ex72.get("L"), ex72.get("B")));
    CHECK(is_bc(SpectralPoly(), ex72.get("L"), ex72.get("B")));
    CHECK(is_bc(BivarPoly(), ex72.get("L"), ex72.get("B")));

    // non-commuting pairs are refused
    auto s = ex72.spec;
    Modo d = Modo::d_power(s, 2, 1);
    Modo xd = Modo::from_matrix(Mat<FieldElement>::scalar(2, fe(s, "x"))) * d;
    CHECK_THROWS_AS(is_bc(bp("lambda"), d, xd), ModoError);
}

TEST_CASE("BC generator on Example 7.2: split curve, both exponents 1") {
    Session ex72 = load_session(ex72_config);
    BCReport r = bc_generator(ex72.get("L"), ex72.get("B"));
    CHECK(r.f_is_bc);
    REQUIRE(r.factors.size() == 2);
    CHECK(render(r.factors[0].h) == "mu - 2*i*lambda^2");
    CHECK(render(r.factors[1].h) == "mu + 2*i*lambda^2");
    CHECK(r.factors[0].sigma == 1);
    CHECK(r.factors[1].sigma == 1);
    CHECK(r.factors[0].r == 1);
    CHECK(r.factors[1].r == 1);
    CHECK(render(r.generator) == "mu^2 + 4*lambda^4");
    CHECK(r.generator == r.curve.curve);
    CHECK(r.f_red == r.curve.curve);
    CHECK(!r.trivial_case);
    CHECK(r.decomposition.size() == 2);
    CHECK(render_quotient(r.decomposition[0].first, r.decomposition[0].second) ==
          "C[lambda,mu]/(mu - 2*i*lambda^2)");
    CHECK(render_quotient(r.decomposition[1].first, r.decomposition[1].second) ==
          "C[lambda,mu]/(mu + 2*i*lambda^2)");
}

TEST_CASE("BC generator on Example 7.1: irreducible curve") {
    Session ex71 = load_session(ex71_config);
    BCReport r = bc_generator(ex71.get("L"), ex71.get("B"));
    CHECK(r.f_is_bc);
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].sigma == 1);
    CHECK(r.factors[0].r == 1);
    CHECK(r.generator == r.curve.curve);
    CHECK(render(r.generator) == "mu^2 + 4*lambda^4 + 16*lambda + 12");
    CHECK(r.decomposition.size() == 1);
    CHECK(!r.trivial_case);
}

TEST_CASE("BC generator on the symbolic AKNS pair: discriminant test in the extension") {
    Session akns = load_session(akns_config);
    BCReport r = bc_generator(akns.get("L"), akns.get("B"));
    CHECK(r.f_is_bc);
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].sigma == 1);
    CHECK(r.factors[0].r == 1);
    CHECK(r.generator == r.curve.curve);
    CHECK(!r.trivial_case);
    // for 2x2 pairs with B not a polynomial in L and f(L,B) = 0, the ideal is (f)
    CHECK(r.generator == r.curve.curve);
}

TEST_CASE("trivial case: B a polynomial in L") {
    auto s = x_spec();
    Mat<FieldElement> a0 = Mat<FieldElement>::zero(2, fc(s, 0));
    a0.at(0, 0) = fe(s, "x");
    a0.at(0, 1) = fc(s, 1);
    a0.at(1, 0) = fe(s, "x^2");
    Mat<FieldElement> a1 = Mat<FieldElement>::zero(2, fc(s, 0));
    a1.at(0, 0) = fc(s, 2);
    a1.at(1, 1) = fc(s, 0, 1);
    Modo l = Modo::from_matrix(a0) + Modo::from_matrix(a1) * Modo::d_power(s, 2, 1);
    Modo b = l.pow(2).scale(fc(s, 3)) + l.scale(fc(s, 0, -1)) + Modo::identity(s, 2).scale(fc(s, 5));

    auto rpoly = poly_in_l(l, b);
    REQUIRE(rpoly);
    CHECK(render(*rpoly) == "3*lambda^2 - i*lambda + 5");

    BCReport report = bc_generator(l, b);
    REQUIRE(report.trivial_case);
    CHECK(render(*report.trivial_case) == "mu - 3*lambda^2 + i*lambda - 5");
    // f = (mu - R)^ell up to the unit, so the single factor has sigma = ell = 2, r = 1
    REQUIRE(report.factors.size() == 1);
    CHECK(report.factors[0].sigma == 2);
    CHECK(report.factors[0].r == 1);
    CHECK(report.factors[0].h == *report.trivial_case);
    CHECK(report.generator == *report.trivial_case);

    // B = L itself
    BCReport rl = bc_generator(l, l);
    REQUIRE(rl.trivial_case);
    CHECK(render(*rl.trivial_case) == "mu - lambda");
    CHECK(rl.factors[0].r == 1);

    // and a pair that is not polynomial in L
    Session ex72 = load_session(ex72_config);
    CHECK(!poly_in_l(ex72.get("L"), ex72.get("B")));
}

TEST_CASE("minimal exponents above one: nilpotent constant coefficients") {
    // L = I D and B = N D with N nilpotent and nonscalar: f = mu^ell up to
    // sign, B is not a polynomial in L, and the least r with mu^r(L,B) = 0
    // is the nilpotency index of N.
    auto s = x_spec();
    Mat<FieldElement> n2 = Mat<FieldElement>::zero(2, fc(s, 0));
    n2.at(0, 1) = fc(s, 1);
    Modo l2 = Modo::d_power(s, 2, 1);
    Modo b2 = Modo::from_matrix(n2) * l2;
    REQUIRE(commutator(l2, b2).is_zero());
    BCReport r2 = bc_generator(l2, b2);
    REQUIRE(r2.factors.size() == 1);
    CHECK(render(r2.factors[0].h) == "mu");
    CHECK(r2.factors[0].sigma == 2);
    CHECK(r2.factors[0].r == 2);
    CHECK(render(r2.generator) == "mu^2");
    CHECK(!r2.trivial_case);
    CHECK(!is_bc(lm_embed(bp("mu"), s), l2, b2));
    CHECK(is_bc(lm_embed(bp("mu^2"), s), l2, b2));

    Mat<FieldElement> n3 = Mat<FieldElement>::zero(3, fc(s, 0));
    n3.at(0, 1) = fc(s, 1);
    n3.at(1, 2) = fc(s, 1);
    Modo l3 = Modo::d_power(s, 3, 1);
    Modo b3 = Modo::from_matrix(n3) * l3;
    BCReport r3 = bc_generator(l3, b3);
    REQUIRE(r3.factors.size() == 1);
    CHECK(r3.factors[0].sigma == 3);
    CHECK(r3.factors[0].r == 3);
    CHECK(render(r3.generator) == "mu^3");
    CHECK(render_quotient(r3.decomposition[0].first, r3.decomposition[0].second) == "C[lambda,mu]/((mu)^3)");
}

TEST_CASE("minimal exponent search and monotonicity") {
    Session ex72 = load_session(ex72_config);
    const Modo& l = ex72.get("L");
    const Modo& b = ex72.get("B");
    SpectralPoly h1 = lm_embed(bp("mu - 2*i*lambda^2"), ex72.spec);
    SpectralPoly h2 = lm_embed(bp("mu + 2*i*lambda^2"), ex72.spec);

    auto rs = minimal_exponents({{h1, 1}, {h2, 1}}, l, b);
    CHECK(rs == std::vector<unsigned>{1, 1});

    // monotonicity: adding extra factor powers keeps the product a BC polynomial
    CHECK(is_bc(h1 * h2, l, b));
    CHECK(is_bc(h1 * h1 * h2, l, b));
    CHECK(is_bc(h1 * h2 * h2, l, b));
    // inflated sigmas: the minimal exponents still come out as 1
    auto rs2 = minimal_exponents({{h1, 3}, {h2, 2}}, l, b);
    CHECK(rs2 == std::vector<unsigned>{1, 1});
}

TEST_CASE("ideal inclusion chain (f) within BC within (f_red) on the corpus") {
    for (const char* config : {akns_config, ex71_config, ex72_config}) {
        Session s = load_session(config);
        BCReport r = bc_generator(s.get("L"), s.get("B"));
        CHECK(r.f_is_bc);
        // (f) inside BC(L,B): multiples of f are BC polynomials
        SpectralPoly lam = SpectralPoly::lambda(fc(s.spec, 1));
        CHECK(is_bc(r.curve.curve * lam, s.get("L"), s.get("B")));
        CHECK(is_bc(r.curve.curve * r.curve.curve, s.get("L"), s.get("B")));
        // BC(L,B) inside (f_red): corpus BC candidates are divisible by f_red
        CHECK(r.curve.curve.divide_exact(r.f_red) != std::nullopt);
        CHECK((r.curve.curve * lam).divide_exact(r.f_red) != std::nullopt);
        // F | f and f_red | F
        CHECK(r.curve.curve.divide_exact(r.generator) != std::nullopt);
        CHECK(r.generator.divide_exact(r.f_red) != std::nullopt);
    }
}

TEST_CASE("user-supplied factorizations are verified before use") {
    Session ex72 = load_session(ex72_config);
    LmFactorization<FieldElement> good;
    good.unit = fc(ex72.spec, 1);
    good.factors = {{lm_embed(bp("mu - 2*i*lambda^2"), ex72.spec), 1},
                    {lm_embed(bp("mu + 2*i*lambda^2"), ex72.spec), 1}};
    BCReport r = bc_generator(ex72.get("L"), ex72.get("B"), good);
    CHECK(r.used_user_factorization);
    CHECK(render(r.generator) == "mu^2 + 4*lambda^4");

    LmFactorization<FieldElement> bad = good;
    bad.factors[0].second = 2;
    CHECK_THROWS_AS(bc_generator(ex72.get("L"), ex72.get("B"), bad), ModoError);
}

TEST_CASE("bc_generator refuses non-commuting pairs") {
    auto s = x_spec();
    Modo d = Modo::d_power(s, 2, 1);
    Modo xd = Modo::from_matrix(Mat<FieldElement>::scalar(2, fe(s, "x"))) * d;
    CHECK_THROWS_AS(bc_generator(d, xd), ModoError);
}
