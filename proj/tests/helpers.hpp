#ifndef MODO_TEST_HELPERS_HPP
#define MODO_TEST_HELPERS_HPP

#include <random>
#include <thread>
#include <string>

#include "modo/render.hpp"
#include "modo/session.hpp"

namespace modo::test {

inline GaussianRational gr(long re, long im = 0) { return GaussianRational(Rational(re), Rational(im)); }

inline SpecPtr x_spec() {
    // K = Q(i)(x), x' = 1
    return DerivationSpec::rational_functions("x", MPoly::constant(GaussianRational::one()));
}

inline SpecPtr t_spec() {
    // K = Q(i)(t) with t' = 2 i t, the presentation of C(e^{2ix})
    return DerivationSpec::rational_functions("t", MPoly::var(0) * gr(0, 2));
}

inline SpecPtr nls_spec() {
    auto prelim = DerivationSpec::differential_polynomials({"u", "v"}, {});
    MPoly u = MPoly::var(prelim->var("u", 0));
    MPoly v = MPoly::var(prelim->var("v", 0));
    std::vector<RewriteRule> rules{
        RewriteRule{"u", 2, u * u * v * gr(-2)},
        RewriteRule{"v", 2, v * v * u * gr(-2)},
    };
    return DerivationSpec::differential_polynomials({"u", "v"}, rules);
}

inline SpecPtr free_uv_spec() { return DerivationSpec::differential_polynomials({"u", "v"}, {}); }

inline FieldElement fe(const SpecPtr& spec, const std::string& text) { return parse_field_element(text, spec); }
inline BivarPoly bp(const std::string& text) { return parse_bivar(text); }

inline FieldElement fc(const SpecPtr& spec, long re, long im = 0) {
    return FieldElement::constant(spec, gr(re, im));
}

/// Random small Gaussian rational.
inline GaussianRational random_gr(std::mt19937_64& rng, bool allow_zero = true) {
    std::uniform_int_distribution<long> d(-4, 4);
    for (;;) {
        GaussianRational z = gr(d(rng), d(rng));
        if (allow_zero || !z.is_zero()) return z;
    }
}

/// Random polynomial element of the field (numerator only, small).
inline FieldElement random_poly_element(const SpecPtr& spec, std::mt19937_64& rng, int terms = 3) {
    std::vector<VarId> vars;
    if (spec->backend() == DerivationSpec::Backend::RatFunc) {
        vars.push_back(0);
    } else {
        for (std::size_t s = 0; s < spec->symbols().size(); ++s)
            for (unsigned o = 0; o < 2; ++o) vars.push_back(spec->var(spec->symbols()[s], o));
    }
    std::uniform_int_distribution<int> exp_d(0, 2);
    std::uniform_int_distribution<std::size_t> var_d(0, vars.size() - 1);
    MPoly p;
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        m = m * Monomial::var(vars[var_d(rng)], static_cast<std::uint32_t>(exp_d(rng)) + 1);
        if (exp_d(rng) == 0) m = m * Monomial::var(vars[var_d(rng)], 1);
        p.add_term(m, random_gr(rng));
    }
    p.add_term(Monomial(), random_gr(rng));
    return FieldElement::from_poly(spec, p);
}

/// Random field element, occasionally a genuine fraction.
inline FieldElement random_element(const SpecPtr& spec, std::mt19937_64& rng) {
    FieldElement num = random_poly_element(spec, rng);
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
        FieldElement den = random_poly_element(spec, rng, 2);
        if (!den.is_zero()) return num / den;
    }
    return num;
}

inline BivarPoly random_bivar(std::mt19937_64& rng, int terms = 4) {
    std::uniform_int_distribution<int> e(0, 3);
    BivarPoly p;
    for (int k = 0; k < terms; ++k)
        p.add_term(LmExp{static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng))}, random_gr(rng));
    return p;
}

inline BivarPoly random_lambda_poly(std::mt19937_64& rng, int maxdeg = 3) {
    std::uniform_int_distribution<int> e(0, maxdeg);
    BivarPoly p;
    for (int k = 0; k <= maxdeg; ++k)
        p.add_term(LmExp{static_cast<std::uint32_t>(e(rng)), 0}, random_gr(rng));
    return p;
}

// Scalar differential operators over K[lambda, mu], for the classical
// Sylvester-style resultant oracle: c[k] is the coefficient of the k-th
// derivative power.
using ScalarPolyOp = std::vector<SpectralPoly>;

inline ScalarPolyOp compose_d(const ScalarPolyOp& a) {
    // left-multiply by the derivation: D * sum c_k d^k
    ScalarPolyOp r(a.size() + 1);
    for (std::size_t k = 0; k < a.size(); ++k) {
        r[k + 1] += a[k];
        r[k] += a[k].derive();
    }
    return r;
}

// Classical differential resultant for scalar operators, P of order n and
// Q of order m: rows D^(m-1) P, ..., P, then the n shifts of Q, in the
// basis d^(n+m-1) .. d^0.
inline SpectralPoly classical_dres(const ScalarPolyOp& p, const ScalarPolyOp& q) {
    std::size_t n = p.size() - 1, m = q.size() - 1;
    std::size_t size = n + m;
    std::vector<ScalarPolyOp> rows;
    std::vector<ScalarPolyOp> stack{p};
    for (std::size_t k = 1; k < m; ++k) stack.push_back(compose_d(stack.back()));
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) rows.push_back(*it);
    std::vector<ScalarPolyOp> qstack{q};
    for (std::size_t k = 1; k < n; ++k) qstack.push_back(compose_d(qstack.back()));
    for (auto it = qstack.rbegin(); it != qstack.rend(); ++it) rows.push_back(*it);

    Mat<SpectralPoly> mat = Mat<SpectralPoly>::zero(size, SpectralPoly());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < size; ++c) {
            std::size_t power = size - 1 - c;
            if (power < rows[r].size()) mat.at(r, c) = rows[r][power];
        }
    return mat.det();
}

// Session fixtures used across the high-level tests; demo commands ship the
// same text.
inline const char* akns_config = R"(
field {
  backend = diffpoly;
  vars = u, v;
  rule u'' = -2*u^2*v;
  rule v'' = -2*v^2*u;
}
operator L = i*[[D, u],[v, -D]];
operator B = i*[[-2*D^2 - u*v, -2*u*D - u'],[-2*v*D - v', 2*D^2 + u*v]];
)";

inline const char* ex71_config = R"(
field { backend = ratfunc; gen = t; d(t) = 2*i*t; }
let u = 1/t;
let v = 2*t;
operator L = i*[[D, u],[v, -D]];
operator B = i*[[-2*D^2 - u*v, -2*u*D - u'],[-2*v*D - v', 2*D^2 + u*v]];
)";

inline const char* ex72_config = R"(
field { backend = ratfunc; gen = x; d(x) = 1; }
let u = x;
let v = 0;
operator L = i*[[D, u],[v, -D]];
operator B = i*[[-2*D^2 - u*v, -2*u*D - u'],[-2*v*D - v', 2*D^2 + u*v]];
)";

} // namespace modo::test

#endif
