#ifndef MODO_LMFACTOR_HPP
#define MODO_LMFACTOR_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "modo/lmpoly.hpp"

namespace modo {

template <class C>
struct LmFactorization {
    C unit;
    std::vector<std::pair<LmPoly<C>, unsigned>> factors;

    LmPoly<C> expand() const {
        LmPoly<C> r = LmPoly<C>::constant(unit);
        for (auto& [h, m] : factors) r *= h.pow_or_one(m, unit);
        return r;
    }
};

using Factorization = LmFactorization<GaussianRational>;

namespace lmdetail {

// Division with remainder for polynomials in lambda only, over the field C.
template <class C>
std::pair<LmPoly<C>, LmPoly<C>> lambda_divmod(const LmPoly<C>& a, const LmPoly<C>& b) {
    if (b.is_zero()) fail(Errc::division_by_zero, "lambda division by zero");
    LmPoly<C> q, r = a;
    auto db = b.degree_lambda();
    const C& bl = b.leading_coeff();
    while (!r.is_zero() && r.degree_lambda() >= db) {
        auto dr = r.degree_lambda();
        C c = r.leading_coeff() / bl;
        LmPoly<C> step;
        step.add_term(LmExp{dr - db, 0}, c);
        q += step;
        r -= step * b;
        if (!r.is_zero() && r.degree_lambda() >= dr && dr > 0) fail(Errc::zero_input, "division failed to reduce degree");
        if (dr == 0) break;
    }
    return {q, r};
}

template <class C>
LmPoly<C> lambda_gcd(LmPoly<C> a, LmPoly<C> b) {
    while (!b.is_zero()) {
        auto [q, r] = lambda_divmod(a, b);
        a = b;
        b = r;
    }
    return a.normalized();
}

// Content of p as a polynomial in mu: gcd in C[lambda] of the mu-coefficients.
template <class C>
LmPoly<C> content_mu(const LmPoly<C>& p) {
    LmPoly<C> c;
    for (auto& [dm, coeff] : p.mu_coefficients()) {
        c = c.is_zero() ? coeff.normalized() : lambda_gcd(c, coeff);
        if (!c.is_zero() && c.degree_lambda() == 0) break;
    }
    return c.normalized();
}

template <class C>
LmPoly<C> mu_pseudo_rem(LmPoly<C> a, const LmPoly<C>& b) {
    auto db = b.degree_mu();
    LmPoly<C> blead = b.mu_coefficients().at(db);
    while (!a.is_zero() && a.degree_mu() >= db) {
        auto da = a.degree_mu();
        LmPoly<C> alead = a.mu_coefficients().at(da);
        LmPoly<C> shift;
        shift.add_term(LmExp{0, da - db}, coeff_one(b.leading_coeff()));
        a = a * blead - b * alead * shift;
        if (!a.is_zero() && a.degree_mu() >= da && da >= db && da > 0)
            fail(Errc::zero_input, "pseudo-division failed to reduce degree");
        if (da == 0) break;
    }
    return a;
}

} // namespace lmdetail

/// gcd in C[lambda, mu]: primitive remainder sequences in mu over C[lambda],
/// with a content / primitive part split. Result has leading coefficient 1.
template <class C>
LmPoly<C> lm_gcd(const LmPoly<C>& a, const LmPoly<C>& b) {
    using namespace lmdetail;
    if (a.is_zero() && b.is_zero()) fail(Errc::zero_input, "gcd(0,0)");
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    if (a.degree_mu() == 0 && b.degree_mu() == 0) return lambda_gcd(a, b);
    if (a.degree_mu() == 0) return lambda_gcd(a, content_mu(b));
    if (b.degree_mu() == 0) return lambda_gcd(b, content_mu(a));

    LmPoly<C> ca = content_mu(a), cb = content_mu(b);
    LmPoly<C> pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
    LmPoly<C> cont = lambda_gcd(ca, cb);

    LmPoly<C> f = pa, g = pb;
    if (f.degree_mu() < g.degree_mu()) std::swap(f, g);
    LmPoly<C> gcd_pp;
    for (;;) {
        LmPoly<C> r = mu_pseudo_rem(f, g);
        if (r.is_zero()) {
            gcd_pp = *g.divide_exact(content_mu(g));
            break;
        }
        if (r.degree_mu() == 0) {
            gcd_pp = LmPoly<C>::constant(coeff_one(a.leading_coeff()));
            break;
        }
        f = g;
        g = *r.divide_exact(content_mu(r));
    }
    return (cont * gcd_pp).normalized();
}

/// Square-free decomposition f = unit * prod g_i^i with the g_i pairwise
/// coprime and square-free.
template <class C>
LmFactorization<C> lm_squarefree(const LmPoly<C>& f) {
    if (f.is_zero()) fail(Errc::zero_input, "square-free decomposition of 0");
    LmFactorization<C> out;
    out.unit = f.leading_coeff();
    if (f.is_constant()) return out;

    auto repeated_part = [](const LmPoly<C>& p) -> LmPoly<C> {
        LmPoly<C> dl = p.formal_dlambda(), dm = p.formal_dmu();
        LmPoly<C> g;
        if (!dl.is_zero()) g = lm_gcd(p, dl);
        if (!dm.is_zero()) g = g.is_zero() ? lm_gcd(p, dm) : lm_gcd(g, dm);
        return g; // zero only if p is constant
    };

    // chain[k] has the multiplicity-(>= k+1) factors of f, each once per level.
    std::vector<LmPoly<C>> chain{f.normalized()};
    while (!chain.back().is_constant()) chain.push_back(repeated_part(chain.back()).normalized());

    std::vector<LmPoly<C>> sqfree_parts; // u_k = chain[k] / chain[k+1]
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) sqfree_parts.push_back(*chain[k].divide_exact(chain[k + 1]));
    sqfree_parts.push_back(LmPoly<C>::constant(coeff_one(f.leading_coeff())));

    for (std::size_t k = 0; k + 1 < sqfree_parts.size(); ++k) {
        LmPoly<C> gk = *sqfree_parts[k].divide_exact(sqfree_parts[k + 1]);
        gk = gk.normalized();
        if (!gk.is_constant()) out.factors.emplace_back(gk, static_cast<unsigned>(k + 1));
    }

    // The normalizations above only ever divide by units of C; recover the
    // exact global unit from the reconstruction.
    LmPoly<C> prod = LmPoly<C>::constant(coeff_one(f.leading_coeff()));
    for (auto& [g, m] : out.factors) prod *= g.pow_or_one(m, f.leading_coeff());
    auto q = f.divide_exact(prod);
    if (!q || !q->is_constant()) fail(Errc::zero_input, "square-free decomposition failed to reconstruct");
    out.unit = q->leading_coeff();
    return out;
}

enum class SqrtStatus { found, none, unsupported };

template <class C>
struct LmSqrtResult {
    SqrtStatus status = SqrtStatus::none;
    LmPoly<C> root;
};

/// Square root of a polynomial in lambda only, over the coefficient field.
/// The candidate root is forced coefficient by coefficient from the leading
/// square root, so a failed verification certifies there is no root.
/// "unsupported" happens only when the leading coefficient is a constant of
/// K that is not an embedded rational, where no square root test exists.
template <class C>
LmSqrtResult<C> lm_sqrt_lambda(const LmPoly<C>& p) {
    LmSqrtResult<C> out;
    if (p.degree_mu() != 0) fail(Errc::domain_mismatch, "sqrt input must be a polynomial in lambda only");
    if (p.is_zero()) {
        out.status = SqrtStatus::found;
        return out;
    }
    auto deg = p.degree_lambda();
    if (deg % 2 != 0) return out;
    std::uint32_t d = deg / 2;
    const C& like = p.leading_coeff();

    auto lead_sqrt = coeff_sqrt(p.leading_coeff());
    if (!lead_sqrt) {
        out.status = coeff_as_rational(p.leading_coeff()) ? SqrtStatus::none : SqrtStatus::unsupported;
        return out;
    }
    std::vector<C> s(d + 1, coeff_zero(like));
    s[d] = *lead_sqrt;
    for (std::uint32_t k = d; k-- > 0;) {
        // p_{d+k} = 2 s_d s_k + sum of s_j s_m over j+m = d+k with j,m < d.
        C known = coeff_zero(like);
        for (std::uint32_t j = k + 1; j + 1 <= d; ++j) known = known + s[j] * s[d + k - j];
        s[k] = (p.coeff(d + k, 0, like) - known) / (s[d] + s[d]);
    }
    LmPoly<C> root;
    for (std::uint32_t k = 0; k <= d; ++k) root.add_term(LmExp{k, 0}, s[k]);
    if (root * root == p) {
        if (!coeff_sign_normal(root.leading_coeff())) root = -root;
        out.status = SqrtStatus::found;
        out.root = root;
        return out;
    }
    return out;
}

/// Optional-style wrapper matching the polyring contract over Q(i).
inline std::optional<BivarPoly> bp_sqrt(const BivarPoly& p) {
    auto r = lm_sqrt_lambda(p);
    if (r.status == SqrtStatus::found) return r.root;
    return std::nullopt;
}

/// Restricted factorization into irreducibles: square-free decomposition,
/// then per square-free part a content split, mu-linear and mu-quadratic
/// handling (discriminant square test), and a Gaussian-rational root search
/// for lambda-only parts up to degree 4.
template <class C>
LmFactorization<C> lm_factor(const LmPoly<C>& f);

std::vector<GaussianRational> gaussian_roots(std::vector<GaussianRational> coeffs);

namespace lmdetail {

template <class C>
std::vector<C> lambda_coeff_vector(const LmPoly<C>& p, const C& like) {
    std::vector<C> v(p.degree_lambda() + 1, coeff_zero(like));
    for (auto& [e, c] : p.terms()) v[e.dl] = c;
    return v;
}

template <class C>
void factor_lambda_only(const LmPoly<C>& p0, const C& like, std::vector<LmPoly<C>>& out) {
    LmPoly<C> p = p0.normalized();
    if (p.is_constant()) return;
    if (p.degree_lambda() == 1) {
        out.push_back(p);
        return;
    }

    auto quadratic = [&](const LmPoly<C>& q) {
        // q = a*l^2 + b*l + c, monic-normalized by the caller.
        C a = q.coeff(2, 0, like), b = q.coeff(1, 0, like), c = q.coeff(0, 0, like);
        C disc = b * b - a * c * coeff_from_rational(like, GaussianRational(4));
        auto s = coeff_sqrt(disc);
        if (!s) {
            if (!coeff_as_rational(disc))
                fail(Errc::unsupported_factorization, "quadratic discriminant outside the supported constants");
            out.push_back(q);
            return;
        }
        C two_a = a + a;
        C r1 = (-b + *s) / two_a, r2 = (-b - *s) / two_a;
        for (const C& r : {r1, r2}) {
            LmPoly<C> lin = LmPoly<C>::lambda(like) - LmPoly<C>::constant(r);
            out.push_back(lin);
        }
    };

    if (p.degree_lambda() == 2) {
        quadratic(p);
        return;
    }
    if (p.degree_lambda() > 4)
        fail(Errc::unsupported_factorization, "lambda-only factor of degree > 4");

    // Root search needs embedded rational coefficients.
    std::vector<GaussianRational> coeffs;
    for (const C& c : lambda_coeff_vector(p, like)) {
        auto q = coeff_as_rational(c);
        if (!q) fail(Errc::unsupported_factorization, "lambda-only factor with non-rational constants");
        coeffs.push_back(*q);
    }
    auto roots = gaussian_roots(coeffs);
    LmPoly<C> rest = p;
    for (auto& r : roots) {
        LmPoly<C> lin = LmPoly<C>::lambda(like) - LmPoly<C>::constant(coeff_from_rational(like, r));
        rest = *rest.divide_exact(lin);
        out.push_back(lin);
    }
    rest = rest.normalized();
    if (rest.is_constant()) return;
    switch (rest.degree_lambda()) {
        case 1: out.push_back(rest); return;
        case 2: quadratic(rest); return;
        case 3: out.push_back(rest); return; // no rational roots left: irreducible
        default: fail(Errc::unsupported_factorization, "rootless lambda-only quartic (may split into quadratics)");
    }
}

template <class C>
void factor_squarefree(const LmPoly<C>& g, const C& like, std::vector<LmPoly<C>>& out) {
    LmPoly<C> cont = content_mu(g);
    factor_lambda_only(cont, like, out);
    LmPoly<C> pp = *g.divide_exact(cont);
    switch (pp.degree_mu()) {
        case 0: return; // constant after the content split
        case 1: out.push_back(pp.normalized()); return;
        case 2: break;
        default: fail(Errc::unsupported_factorization, "mu-degree > 2 square-free part");
    }

    auto by_mu = pp.mu_coefficients();
    const LmPoly<C> zero;
    LmPoly<C> a = by_mu.count(2) ? by_mu.at(2) : zero;
    LmPoly<C> b = by_mu.count(1) ? by_mu.at(1) : zero;
    LmPoly<C> c = by_mu.count(0) ? by_mu.at(0) : zero;
    LmPoly<C> four = LmPoly<C>::constant(coeff_from_rational(like, GaussianRational(4)));
    LmPoly<C> disc = b * b - four * a * c;
    auto s = lm_sqrt_lambda(disc);
    if (s.status == SqrtStatus::unsupported)
        fail(Errc::unsupported_factorization, "discriminant square test outside the supported constants");
    if (s.status == SqrtStatus::none) {
        out.push_back(pp.normalized());
        return;
    }
    // (2a*mu + b - s)(2a*mu + b + s) = 4a * pp
    LmPoly<C> mu = LmPoly<C>::mu(like);
    LmPoly<C> two_a = a + a;
    for (int sign : {-1, +1}) {
        LmPoly<C> u = mu * two_a + b + (sign < 0 ? -s.root : s.root);
        LmPoly<C> h = (*u.divide_exact(content_mu(u))).normalized();
        out.push_back(h);
    }
}

} // namespace lmdetail

template <class C>
LmFactorization<C> lm_factor(const LmPoly<C>& f) {
    if (f.is_zero()) fail(Errc::zero_input, "factorization of 0");
    const C like = f.leading_coeff();
    LmFactorization<C> sf = lm_squarefree(f);
    LmFactorization<C> out;
    out.unit = sf.unit;
    for (auto& [g, mult] : sf.factors) {
        std::vector<LmPoly<C>> hs;
        lmdetail::factor_squarefree(g, like, hs);
        for (auto& h : hs) out.factors.emplace_back(h, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) { return lm_less(x.first, y.first); });
    // Merge associates (equal after normalization) and recover the unit.
    std::vector<std::pair<LmPoly<C>, unsigned>> merged;
    for (auto& [h, m] : out.factors) {
        if (!merged.empty() && merged.back().first == h) {
            merged.back().second += m;
        } else {
            merged.emplace_back(h, m);
        }
    }
    out.factors = std::move(merged);
    LmPoly<C> prod = LmPoly<C>::constant(coeff_one(like));
    for (auto& [h, m] : out.factors) prod *= h.pow_or_one(m, like);
    auto q = f.divide_exact(prod);
    if (!q || !q->is_constant()) fail(Errc::zero_input, "factorization failed to reconstruct input");
    out.unit = q->leading_coeff();
    return out;
}

/// Verify a user-supplied factorization reconstructs f exactly.
template <class C>
void lm_verify_factorization(const LmPoly<C>& f, const LmFactorization<C>& fac) {
    for (auto& [h, m] : fac.factors) {
        if (h.is_constant()) fail(Errc::invalid_user_factorization, "constant factor");
        if (m == 0) fail(Errc::invalid_user_factorization, "zero multiplicity");
    }
    for (std::size_t i = 0; i < fac.factors.size(); ++i)
        for (std::size_t j = i + 1; j < fac.factors.size(); ++j)
            if (fac.factors[i].first.normalized() == fac.factors[j].first.normalized())
                fail(Errc::invalid_user_factorization, "associate factors listed twice");
    if (!(fac.expand() == f)) fail(Errc::invalid_user_factorization, "product does not reconstruct the input");
}

} // namespace modo

#endif
