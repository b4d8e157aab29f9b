#ifndef MODO_LMPOLY_HPP
#define MODO_LMPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "modo/field.hpp"

namespace modo {

// Coefficient-field glue shared by Q(i) and K coefficients.
inline GaussianRational coeff_zero(const GaussianRational&) { return GaussianRational::zero(); }
inline GaussianRational coeff_one(const GaussianRational&) { return GaussianRational::one(); }
inline bool coeff_is_zero(const GaussianRational& c) { return c.is_zero(); }
inline bool coeff_is_one(const GaussianRational& c) { return c.is_one(); }
inline GaussianRational coeff_derive(const GaussianRational&) { return GaussianRational::zero(); }
inline std::optional<GaussianRational> coeff_as_rational(const GaussianRational& c) { return c; }
inline GaussianRational coeff_from_rational(const GaussianRational&, GaussianRational v) { return v; }
inline std::optional<GaussianRational> coeff_sqrt(const GaussianRational& c) { return gr_sqrt(c); }
inline bool coeff_sign_normal(const GaussianRational& c) { return c.sign_normal(); }
inline bool coeff_less(const GaussianRational& a, const GaussianRational& b) { return a < b; }

inline FieldElement coeff_zero(const FieldElement& like) { return like.zero_like(); }
inline FieldElement coeff_one(const FieldElement& like) { return like.one_like(); }
inline bool coeff_is_zero(const FieldElement& c) { return c.is_zero(); }
inline bool coeff_is_one(const FieldElement& c) { return c.is_one(); }
inline FieldElement coeff_derive(const FieldElement& c) { return c.derive(); }
inline std::optional<GaussianRational> coeff_as_rational(const FieldElement& c) { return c.as_rational(); }
inline FieldElement coeff_from_rational(const FieldElement& like, GaussianRational v) {
    return FieldElement::constant(like.spec(), std::move(v));
}
inline std::optional<FieldElement> coeff_sqrt(const FieldElement& c) {
    // Square roots are only found through the embedded rationals; a
    // non-rational constant is outside the supported class.
    auto q = c.as_rational();
    if (!q) return std::nullopt;
    auto s = gr_sqrt(*q);
    if (!s) return std::nullopt;
    return FieldElement::constant(c.spec(), *s);
}
inline bool coeff_sign_normal(const FieldElement& c) {
    return !c.is_zero() && c.num().leading_coeff().sign_normal();
}
bool mpoly_less(const MPoly& a, const MPoly& b);
inline bool coeff_less(const FieldElement& a, const FieldElement& b) {
    if (a.num() != b.num()) return mpoly_less(a.num(), b.num());
    return mpoly_less(a.den(), b.den());
}

/// Exponent pair of a lambda/mu term.
struct LmExp {
    std::uint32_t dl = 0;
    std::uint32_t dm = 0;
    bool operator==(const LmExp& o) const { return dl == o.dl && dm == o.dm; }
};

/// Canonical term order of the polynomial ring in lambda and mu:
/// mu-degree descending, ties by lambda-degree descending. The first term
/// under this order is the leading term used for all normalizations and
/// for the canonical string form.
struct LmTermOrder {
    bool operator()(const LmExp& a, const LmExp& b) const {
        if (a.dm != b.dm) return a.dm > b.dm;
        return a.dl > b.dl;
    }
};

/// Polynomial in lambda and mu over a coefficient field C. C is either
/// GaussianRational (the constant field) or FieldElement (K coefficients,
/// as needed for the spectral lift).
template <class C>
class LmPoly {
  public:
    using TermMap = std::map<LmExp, C, LmTermOrder>;

    LmPoly() = default;
    explicit LmPoly(C c) {
        if (!coeff_is_zero(c)) terms_[LmExp{0, 0}] = std::move(c);
    }
    static LmPoly constant(C c) { return LmPoly(std::move(c)); }
    static LmPoly lambda(const C& like, std::uint32_t e = 1) { return monomial(like, e, 0); }
    static LmPoly mu(const C& like, std::uint32_t e = 1) { return monomial(like, 0, e); }
    static LmPoly monomial(const C& like, std::uint32_t dl, std::uint32_t dm) {
        LmPoly p;
        p.terms_[LmExp{dl, dm}] = coeff_one(like);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == LmExp{0, 0}); }
    bool is_lambda_only() const { return degree_mu() == 0; }

    std::uint32_t degree_lambda() const {
        std::uint32_t d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, e.dl);
        return d;
    }
    std::uint32_t degree_mu() const { return terms_.empty() ? 0 : terms_.begin()->first.dm; }

    C coeff(std::uint32_t dl, std::uint32_t dm, const C& like) const {
        auto it = terms_.find(LmExp{dl, dm});
        return it == terms_.end() ? coeff_zero(like) : it->second;
    }
    const std::pair<const LmExp, C>& leading() const {
        if (terms_.empty()) fail(Errc::zero_input, "leading term of zero polynomial");
        return *terms_.begin();
    }
    const C& leading_coeff() const { return leading().second; }

    void add_term(LmExp e, const C& c) {
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    LmPoly operator-() const {
        LmPoly r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    LmPoly operator+(const LmPoly& o) const {
        LmPoly r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    LmPoly operator-(const LmPoly& o) const {
        LmPoly r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    LmPoly operator*(const LmPoly& o) const {
        LmPoly r;
        for (auto& [ea, ca] : terms_)
            for (auto& [eb, cb] : o.terms_) r.add_term(LmExp{ea.dl + eb.dl, ea.dm + eb.dm}, ca * cb);
        return r;
    }
    LmPoly operator*(const C& c) const {
        LmPoly r;
        if (coeff_is_zero(c)) return r;
        for (auto& [e, a] : terms_) r.add_term(e, a * c);
        return r;
    }
    LmPoly& operator+=(const LmPoly& o) { return *this = *this + o; }
    LmPoly& operator-=(const LmPoly& o) { return *this = *this - o; }
    LmPoly& operator*=(const LmPoly& o) { return *this = *this * o; }
    bool operator==(const LmPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LmPoly& o) const { return !(*this == o); }

    LmPoly pow(std::uint32_t e) const {
        LmPoly r, b = *this;
        bool started = false;
        while (e > 0) {
            if (e & 1) {
                r = started ? r * b : b;
                started = true;
            }
            b = b * b;
            e >>= 1;
        }
        if (!started) fail(Errc::zero_input, "pow(0) needs a coefficient context; use constant()");
        return r;
    }
    LmPoly pow_or_one(std::uint32_t e, const C& like) const {
        if (e == 0) return constant(coeff_one(like));
        return pow(e);
    }

    /// Coefficientwise derivation (lambda and mu are differential constants).
    LmPoly derive() const {
        LmPoly r;
        for (auto& [e, c] : terms_) r.add_term(e, coeff_derive(c));
        return r;
    }

    LmPoly formal_dlambda() const {
        LmPoly r;
        for (auto& [e, c] : terms_) {
            if (e.dl == 0) continue;
            r.add_term(LmExp{e.dl - 1, e.dm}, c * coeff_from_rational(c, GaussianRational(Rational(e.dl))));
        }
        return r;
    }
    LmPoly formal_dmu() const {
        LmPoly r;
        for (auto& [e, c] : terms_) {
            if (e.dm == 0) continue;
            r.add_term(LmExp{e.dl, e.dm - 1}, c * coeff_from_rational(c, GaussianRational(Rational(e.dm))));
        }
        return r;
    }

    /// Exact evaluation at a Gaussian-rational point.
    C eval_point(const GaussianRational& l0, const GaussianRational& m0, const C& like) const {
        C r = coeff_zero(like);
        for (auto& [e, c] : terms_)
            r = r + c * coeff_from_rational(like, gr_pow(l0, e.dl) * gr_pow(m0, e.dm));
        return r;
    }

    /// View as univariate in mu with coefficients in C[lambda].
    std::map<std::uint32_t, LmPoly> mu_coefficients() const {
        std::map<std::uint32_t, LmPoly> r;
        for (auto& [e, c] : terms_) r[e.dm].add_term(LmExp{e.dl, 0}, c);
        return r;
    }
    static LmPoly from_mu_coefficients(const std::map<std::uint32_t, LmPoly>& by_mu) {
        LmPoly r;
        for (auto& [dm, p] : by_mu)
            for (auto& [e, c] : p.terms_) r.add_term(LmExp{e.dl, dm}, c);
        return r;
    }

    /// Exact division; nullopt when o does not divide this.
    std::optional<LmPoly> divide_exact(const LmPoly& o) const {
        if (o.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
        LmPoly rem = *this, quot;
        const auto& [le, lc] = o.leading();
        while (!rem.is_zero()) {
            const auto& [re, rc] = rem.leading();
            if (re.dl < le.dl || re.dm < le.dm) return std::nullopt;
            LmPoly step;
            step.terms_[LmExp{re.dl - le.dl, re.dm - le.dm}] = rc / lc;
            quot += step;
            rem -= step * o;
        }
        return quot;
    }

    /// Leading coefficient scaled to 1.
    LmPoly normalized() const {
        if (is_zero()) return *this;
        C inv = coeff_one(leading_coeff()) / leading_coeff();
        return *this * inv;
    }

  private:
    TermMap terms_;
};

using BivarPoly = LmPoly<GaussianRational>;
using SpectralPoly = LmPoly<FieldElement>;

/// Deterministic total order on LmPoly values (for sorting factor lists).
template <class C>
bool lm_less(const LmPoly<C>& a, const LmPoly<C>& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    LmTermOrder lt;
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (!(ia->first == ib->first)) return lt(ia->first, ib->first);
        if (!(ia->second == ib->second)) return coeff_less(ia->second, ib->second);
        ++ia;
        ++ib;
    }
    return ib != b.terms().end();
}

/// SpectralPoly -> BivarPoly when every coefficient is an embedded rational.
std::optional<BivarPoly> lm_to_rational(const SpectralPoly& p);
/// BivarPoly -> SpectralPoly over the given coefficient field.
SpectralPoly lm_embed(const BivarPoly& p, const SpecPtr& spec);

// Ring glue for evaluating a polynomial at a commuting pair. Each target
// ring supplies these via overloads; Modo adds its own in modo_op.hpp.
inline GaussianRational ring_zero_like(const GaussianRational&) { return GaussianRational::zero(); }
inline GaussianRational ring_one_like(const GaussianRational&) { return GaussianRational::one(); }
inline GaussianRational ring_scale(const GaussianRational& x, const GaussianRational& c) { return x * c; }
inline FieldElement ring_zero_like(const FieldElement& x) { return x.zero_like(); }
inline FieldElement ring_one_like(const FieldElement& x) { return x.one_like(); }
inline FieldElement ring_scale(const FieldElement& x, const GaussianRational& c) {
    return x * FieldElement::constant(x.spec(), c);
}
inline FieldElement ring_scale(const FieldElement& x, const FieldElement& c) { return x * c; }

/// Evaluate g at a commuting pair (X, Y): lambda -> X, mu -> Y. Horner in
/// mu with precomputed powers of X. Commutativity is the caller's
/// responsibility here; op_eval_poly enforces it for operator rings.
template <class C, class Ring>
Ring bp_eval_commuting(const LmPoly<C>& g, const Ring& X, const Ring& Y) {
    Ring zero = ring_zero_like(X);
    if (g.is_zero()) return zero;
    std::vector<Ring> xpow{ring_one_like(X)};
    for (std::uint32_t k = 1; k <= g.degree_lambda(); ++k) xpow.push_back(xpow.back() * X);

    auto by_mu = g.mu_coefficients();
    Ring acc = zero;
    std::uint32_t prev_dm = 0;
    bool first = true;
    for (auto it = by_mu.rbegin(); it != by_mu.rend(); ++it) {
        auto [dm, coeff_poly] = *it;
        if (!first)
            for (std::uint32_t k = dm; k < prev_dm; ++k) acc = acc * Y;
        Ring level = zero;
        for (auto& [e, c] : coeff_poly.terms()) level = level + ring_scale(xpow[e.dl], c);
        acc = acc + level;
        prev_dm = dm;
        first = false;
    }
    for (std::uint32_t k = 0; k < prev_dm; ++k) acc = acc * Y;
    return acc;
}

} // namespace modo

#endif
