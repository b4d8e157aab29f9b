#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace modo;
using modo::test::gr;

namespace {

MPoly rand_mpoly(std::mt19937_64& rng, int nvars, int terms) {
    std::uniform_int_distribution<int> v(0, nvars - 1), e(0, 3);
    MPoly p;
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        m = m * Monomial::var(static_cast<VarId>(v(rng)), static_cast<std::uint32_t>(e(rng)));
        m = m * Monomial::var(static_cast<VarId>(v(rng)), static_cast<std::uint32_t>(e(rng)));
        p.add_term(m, modo::test::random_gr(rng));
    }
    return p;
}

} // namespace

TEST_CASE("ring arithmetic and cancellation") {
    MPoly x = MPoly::var(0), y = MPoly::var(1);
    CHECK((x + y) - y == x);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x * MPoly()) == MPoly());
    CHECK(x.pow(3) == x * x * x);
}

TEST_CASE("exact division") {
    MPoly x = MPoly::var(0), y = MPoly::var(1);
    MPoly p = (x + y) * (x * x - y) * gr(3);
    auto q = p.divide_exact(x + y);
    REQUIRE(q);
    CHECK(*q == (x * x - y) * gr(3));
    CHECK(p.divide_exact(x - y) == std::nullopt);
}

TEST_CASE("division round-trip on random products") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 100; ++k) {
        MPoly a = rand_mpoly(rng, 3, 3), b = rand_mpoly(rng, 3, 2);
        if (b.is_zero()) continue;
        auto q = (a * b).divide_exact(b);
        REQUIRE(q);
        CHECK(*q == a);
    }
}

TEST_CASE("gcd divides both inputs exactly") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 60; ++k) {
        MPoly a = rand_mpoly(rng, 3, 3), b = rand_mpoly(rng, 3, 3), c = rand_mpoly(rng, 3, 2);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        MPoly g = mpoly_gcd(a * c, b * c);
        CHECK((a * c).divide_exact(g));
        CHECK((b * c).divide_exact(g));
        // the common factor c must divide the gcd
        CHECK(g.divide_exact(c.monic()) != std::nullopt);
    }
}

TEST_CASE("gcd normalization and edge cases") {
    MPoly x = MPoly::var(0);
    CHECK(mpoly_gcd(x * gr(4), MPoly()) == x);
    CHECK(mpoly_gcd(MPoly::constant(gr(6)), x) == MPoly::constant(gr(1)));
    CHECK_THROWS_AS(mpoly_gcd(MPoly(), MPoly()), ModoError);
}

TEST_CASE("formal derivative is a derivation") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 60; ++k) {
        MPoly a = rand_mpoly(rng, 2, 3), b = rand_mpoly(rng, 2, 3);
        MPoly lhs = (a * b).formal_derivative(0);
        MPoly rhs = a.formal_derivative(0) * b + a * b.formal_derivative(0);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("substitution") {
    MPoly x = MPoly::var(0), y = MPoly::var(1);
    MPoly p = x * x + y;
    CHECK(p.substitute(0, y) == y * y + y);
    CHECK(p.substitute(1, MPoly::constant(gr(1))) == x * x + MPoly::constant(gr(1)));
}

TEST_CASE("canonical term order: degree first, then earlier variables") {
    auto spec = DerivationSpec::differential_polynomials({"x", "y"}, {});
    MPoly x = MPoly::var(spec->var("x", 0)), y = MPoly::var(spec->var("y", 0));
    MPoly p = y * y + x * y + x * x + x;
    CHECK(render(p, spec) == "x^2 + x*y + y^2 + x");
}
