#ifndef MODO_RATIONAL_HPP
#define MODO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "modo/error.hpp"

namespace modo {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of Q(i), the Gaussian rationals. Plays the role of the
/// constant field C; both parts are kept in canonical reduced form by
/// the underlying rational type.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(long n) : re(n) {}
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational imaginary_unit() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    /// re^2 + im^2, as a rational.
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational inverse() const {
        if (is_zero()) fail(Errc::division_by_zero, "inverse of 0 in Q(i)");
        Rational n = norm();
        return {re / n, -im / n};
    }
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    /// Total order used only for deterministic sorting, not algebra.
    bool operator<(const GaussianRational& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }

    /// Canonical sign: nonzero z is sign-normal if re > 0, or re == 0 and im > 0.
    bool sign_normal() const { return re > 0 || (re == 0 && im > 0); }

    GaussianRational pow(unsigned long e) const;
};

GaussianRational gr_pow(const GaussianRational& b, unsigned long e);

/// Exact square root in Q, if it exists.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Exact square root in Q(i), if it exists; the sign-normal root is returned.
std::optional<GaussianRational> gr_sqrt(const GaussianRational& z);

/// Exact binomial coefficient.
Int binomial(unsigned n, unsigned k);

} // namespace modo

#endif
