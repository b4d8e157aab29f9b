#include "modo/rational.hpp"

namespace modo {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::division_by_zero: return "DIVISION_BY_ZERO";
        case Errc::singular_matrix: return "SINGULAR_MATRIX";
        case Errc::dimension_mismatch: return "DIMENSION_MISMATCH";
        case Errc::wrong_order: return "WRONG_ORDER";
        case Errc::singular_leading_coefficient: return "SINGULAR_LEADING_COEFFICIENT";
        case Errc::noncommuting_pair: return "NONCOMMUTING_PAIR";
        case Errc::noncommuting_arguments: return "NONCOMMUTING_ARGUMENTS";
        case Errc::nonconstant_coefficients: return "NONCONSTANT_COEFFICIENTS";
        case Errc::unsupported_factorization: return "UNSUPPORTED_FACTORIZATION";
        case Errc::invalid_user_factorization: return "INVALID_USER_FACTORIZATION";
        case Errc::joint_minimality_failure: return "JOINT_MINIMALITY_FAILURE";
        case Errc::zero_denominator_entry: return "ZERO_DENOMINATOR_ENTRY";
        case Errc::not_akns_shape: return "NOT_AKNS_SHAPE";
        case Errc::syntax_error: return "SYNTAX_ERROR";
        case Errc::undeclared_symbol: return "UNDECLARED_SYMBOL";
        case Errc::zero_input: return "ZERO_INPUT";
        case Errc::domain_mismatch: return "DOMAIN_MISMATCH";
    }
    return "UNKNOWN";
}

GaussianRational GaussianRational::pow(unsigned long e) const { return gr_pow(*this, e); }

GaussianRational gr_pow(const GaussianRational& b, unsigned long e) {
    GaussianRational r = GaussianRational::one();
    GaussianRational base = b;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

static std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int s = boost::multiprecision::sqrt(n);
    if (s * s != n) return std::nullopt;
    return s;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto ns = int_sqrt_exact(numerator(r));
    if (!ns) return std::nullopt;
    auto ds = int_sqrt_exact(denominator(r));
    if (!ds) return std::nullopt;
    return Rational(*ns, *ds);
}

std::optional<GaussianRational> gr_sqrt(const GaussianRational& z) {
    if (z.is_zero()) return GaussianRational::zero();
    // (c+di)^2 = a+bi  =>  c^2 - d^2 = a, 2cd = b, and c^2 + d^2 = sqrt(a^2+b^2).
    auto r = rational_sqrt(z.norm());
    if (!r) return std::nullopt;
    auto c2 = (z.re + *r) / 2;
    auto c = rational_sqrt(c2);
    if (!c) return std::nullopt;
    GaussianRational w;
    if (*c != 0) {
        w = GaussianRational(*c, z.im / (2 * *c));
    } else {
        auto d = rational_sqrt(-z.re);
        if (!d) return std::nullopt;
        w = GaussianRational(Rational(0), *d);
    }
    if (w * w != z) return std::nullopt;
    if (!w.sign_normal()) w = -w;
    return w;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

} // namespace modo
