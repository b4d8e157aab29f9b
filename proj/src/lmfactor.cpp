#include "modo/lmfactor.hpp"

#include <set>

namespace modo {

namespace {

Int gaussian_norm(const GaussianRational& z) {
    // Assumes integer entries.
    Int a = numerator(z.re), b = numerator(z.im);
    return a * a + b * b;
}

GaussianRational horner(const std::vector<GaussianRational>& coeffs, const GaussianRational& x) {
    GaussianRational r;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

// All Gaussian integers whose norm divides n. A superset of the divisors of
// any Gaussian integer with norm n, which is all the root search needs.
std::vector<GaussianRational> candidates_by_norm(const Int& n) {
    std::vector<GaussianRational> out;
    Int bound = boost::multiprecision::sqrt(n);
    for (Int a = -bound; a <= bound; ++a)
        for (Int b = -bound; b <= bound; ++b) {
            Int nb = a * a + b * b;
            if (nb == 0 || nb > n) continue;
            if (n % nb == 0) out.emplace_back(Rational(a), Rational(b));
        }
    return out;
}

} // namespace

std::vector<GaussianRational> gaussian_roots(std::vector<GaussianRational> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    std::vector<GaussianRational> roots;
    if (coeffs.size() <= 1) return roots;

    std::size_t shift = 0;
    while (shift < coeffs.size() && coeffs[shift].is_zero()) ++shift;
    for (std::size_t k = 0; k < shift; ++k) roots.push_back(GaussianRational::zero());
    coeffs.erase(coeffs.begin(), coeffs.begin() + shift);
    if (coeffs.size() <= 1) return roots;

    Int scale = 1;
    for (auto& c : coeffs) {
        scale = boost::multiprecision::lcm(scale, denominator(c.re));
        scale = boost::multiprecision::lcm(scale, denominator(c.im));
    }
    std::vector<GaussianRational> ic;
    for (auto& c : coeffs) ic.push_back(c * GaussianRational(Rational(scale)));

    Int n0 = gaussian_norm(ic.front());
    Int nd = gaussian_norm(ic.back());
    if (n0 > 1000000 || nd > 1000000)
        fail(Errc::unsupported_factorization, "root search coefficients too large");

    std::set<std::pair<Rational, Rational>> seen;
    std::vector<GaussianRational> ratios;
    for (auto& beta : candidates_by_norm(n0))
        for (auto& gamma : candidates_by_norm(nd)) {
            GaussianRational r = beta / gamma;
            if (seen.insert({r.re, r.im}).second) ratios.push_back(r);
        }

    for (auto& r : ratios) {
        while (coeffs.size() > 1 && horner(coeffs, r).is_zero()) {
            // Synthetic division by (lambda - r).
            std::vector<GaussianRational> q(coeffs.size() - 1);
            GaussianRational carry = coeffs.back();
            for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
                q[k] = carry;
                carry = coeffs[k] + carry * r;
            }
            coeffs = std::move(q);
            roots.push_back(r);
        }
        if (coeffs.size() <= 1) break;
    }
    return roots;
}

} // namespace modo
