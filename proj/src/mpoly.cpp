#include "modo/mpoly.hpp"

#include <algorithm>

namespace modo {

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() || b != o.factors.end()) {
        if (b == o.factors.end() || (a != factors.end() && a->first < b->first)) {
            r.factors.push_back(*a++);
        } else if (a == factors.end() || b->first < a->first) {
            r.factors.push_back(*b++);
        } else {
            r.factors.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial r;
    auto a = factors.begin();
    for (auto& [v, e] : o.factors) {
        while (a != factors.end() && a->first < v) r.factors.push_back(*a++);
        if (a == factors.end() || a->first != v || a->second < e) return std::nullopt;
        if (a->second > e) r.factors.emplace_back(v, a->second - e);
        ++a;
    }
    while (a != factors.end()) r.factors.push_back(*a++);
    return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() && ib != b.factors.end()) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    // Same total degree and one is a prefix of the other: impossible unless equal.
    return false;
}

std::uint64_t MPoly::total_degree() const {
    std::uint64_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::uint32_t MPoly::degree_in(VarId v) const {
    std::uint32_t d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

std::vector<VarId> MPoly::variables() const {
    std::vector<VarId> vs;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.factors)
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    return vs;
}

const std::pair<const Monomial, GaussianRational>& MPoly::leading() const {
    if (terms_.empty()) fail(Errc::zero_input, "leading term of zero polynomial");
    return *terms_.begin();
}

void MPoly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly MPoly::operator*(const GaussianRational& c) const {
    MPoly r;
    if (c.is_zero()) return r;
    for (auto& [m, a] : terms_) r.terms_[m] = a * c;
    return r;
}

MPoly MPoly::pow(std::uint32_t e) const {
    MPoly r = MPoly::constant(GaussianRational::one());
    MPoly b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& o) const {
    if (o.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
    MPoly rem = *this;
    MPoly quot;
    const auto& lead = o.leading();
    while (!rem.is_zero()) {
        auto& rl = rem.leading();
        auto m = rl.first.divide(lead.first);
        if (!m) return std::nullopt;
        GaussianRational c = rl.second / lead.second;
        MPoly step;
        step.terms_[*m] = c;
        quot += step;
        rem -= step * o;
    }
    return quot;
}

MPoly MPoly::formal_derivative(VarId v) const {
    MPoly r;
    for (auto& [m, c] : terms_) {
        auto e = m.degree_in(v);
        if (e == 0) continue;
        Monomial dm = *m.divide(Monomial::var(v));
        r.add_term(dm, c * GaussianRational(Rational(e)));
    }
    return r;
}

MPoly MPoly::substitute(VarId v, const MPoly& value) const {
    // Group by exponent of v and evaluate with precomputed powers.
    auto uni = univariate_in(v);
    MPoly r;
    MPoly p = MPoly::constant(GaussianRational::one());
    std::uint32_t cur = 0;
    for (auto& [e, coeff] : uni) {
        while (cur < e) {
            p *= value;
            ++cur;
        }
        r += coeff * p;
    }
    return r;
}

std::map<std::uint32_t, MPoly> MPoly::univariate_in(VarId v) const {
    std::map<std::uint32_t, MPoly> r;
    for (auto& [m, c] : terms_) {
        auto e = m.degree_in(v);
        Monomial rest = e ? *m.divide(Monomial::var(v, e)) : m;
        r[e].add_term(rest, c);
    }
    return r;
}

MPoly MPoly::from_univariate(VarId v, const std::map<std::uint32_t, MPoly>& coeffs) {
    MPoly r;
    for (auto& [e, c] : coeffs) {
        MPoly ve = MPoly::var(v, e);
        if (e == 0) ve = MPoly::constant(GaussianRational::one());
        r += c * ve;
    }
    return r;
}

MPoly MPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coeff().inverse();
}

namespace {

// Content of p viewed as univariate in v: gcd of its coefficients.
MPoly content_in(const MPoly& p, VarId v) {
    MPoly c;
    for (auto& [e, coeff] : p.univariate_in(v)) {
        if (c.is_zero()) {
            c = coeff;
        } else {
            c = mpoly_gcd(c, coeff);
        }
        if (c.is_constant()) return MPoly::constant(GaussianRational::one());
    }
    return c.monic();
}

// Classical pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, in v.
MPoly pseudo_rem(MPoly a, const MPoly& b, VarId v) {
    auto db = b.degree_in(v);
    MPoly blead = b.univariate_in(v).at(db);
    auto da0 = a.degree_in(v);
    if (a.is_zero() || da0 < db) return a;
    std::uint32_t e = da0 - db + 1;
    while (!a.is_zero() && a.degree_in(v) >= db) {
        auto da = a.degree_in(v);
        MPoly alead = a.univariate_in(v).at(da);
        a = a * blead - b * alead * MPoly::var(v, da - db);
        --e;
        if (!a.is_zero() && a.degree_in(v) >= da) fail(Errc::zero_input, "pseudo-division failed to reduce degree");
        if (da == 0) break;
    }
    return a * blead.pow(e);
}

} // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero()) fail(Errc::zero_input, "gcd(0,0)");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return MPoly::constant(GaussianRational::one());

    // Main variable: highest id present in either (jet variables come and go,
    // so the choice just has to be deterministic).
    VarId v = std::max(a.variables().back(), b.variables().back());
    if (!a.contains_var(v) || !b.contains_var(v)) {
        // v appears in only one of them: gcd divides the content of that one.
        const MPoly& with = a.contains_var(v) ? a : b;
        const MPoly& without = a.contains_var(v) ? b : a;
        return mpoly_gcd(content_in(with, v), without);
    }

    MPoly ca = content_in(a, v), cb = content_in(b, v);
    MPoly pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
    MPoly cont = mpoly_gcd(ca, cb);

    // Subresultant PRS on the primitive parts; contents are only extracted
    // from the inputs and the final remainder, never per step.
    MPoly s = pa, t = pb;
    if (s.degree_in(v) < t.degree_in(v)) std::swap(s, t);
    MPoly g = MPoly::constant(GaussianRational::one());
    MPoly h = g;
    for (;;) {
        std::uint32_t delta = s.degree_in(v) - t.degree_in(v);
        MPoly r = pseudo_rem(s, t, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) return cont.monic();
        s = t;
        MPoly divisor = g * h.pow(delta);
        t = *r.divide_exact(divisor);
        g = s.univariate_in(v).at(s.degree_in(v));
        if (delta > 0) {
            MPoly gd = g.pow(delta);
            h = (delta == 1) ? gd : *gd.divide_exact(h.pow(delta - 1));
        }
    }
    return (cont * *t.divide_exact(content_in(t, v))).monic();
}

} // namespace modo
