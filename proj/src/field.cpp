#include "modo/field.hpp"

#include <algorithm>

namespace modo {

std::shared_ptr<const DerivationSpec> DerivationSpec::rational_functions(std::string generator,
                                                                         MPoly generator_derivative) {
    auto spec = std::shared_ptr<DerivationSpec>(new DerivationSpec());
    spec->backend_ = Backend::RatFunc;
    spec->symbols_ = {std::move(generator)};
    spec->gen_derivative_ = std::move(generator_derivative);
    for (VarId v : spec->gen_derivative_.variables())
        if (v != 0) fail(Errc::syntax_error, "generator derivative must be a polynomial in the generator");
    return spec;
}

std::shared_ptr<const DerivationSpec> DerivationSpec::differential_polynomials(std::vector<std::string> symbols,
                                                                               std::vector<RewriteRule> rules) {
    auto spec = std::shared_ptr<DerivationSpec>(new DerivationSpec());
    spec->backend_ = Backend::DiffPoly;
    spec->symbols_ = std::move(symbols);
    spec->rules_ = std::move(rules);
    for (auto& r : spec->rules_) {
        auto it = std::find(spec->symbols_.begin(), spec->symbols_.end(), r.symbol);
        if (it == spec->symbols_.end()) fail(Errc::undeclared_symbol, "rule for undeclared symbol " + r.symbol);
        std::size_t idx = it - spec->symbols_.begin();
        if (spec->rule_by_symbol_.count(idx)) fail(Errc::syntax_error, "duplicate rule for symbol " + r.symbol);
        if (r.order == 0) fail(Errc::syntax_error, "rewrite threshold must be positive for " + r.symbol);
        for (VarId v : r.rhs.variables()) {
            auto [sym, ord] = spec->jet_of(v);
            if (spec->symbols_.at(sym) == r.symbol && ord >= r.order)
                fail(Errc::syntax_error, "rule right-hand side contains the rewritten jet");
        }
        spec->rule_by_symbol_[idx] = {r.order, r.rhs};
    }
    // Right-hand sides may mention other symbols' reducible jets; bring the
    // whole system to normal form once, then drop stale prolongations.
    for (auto& [idx, rule] : spec->rule_by_symbol_) rule.second = spec->reduce(rule.second);
    spec->prolonged_cache_.clear();
    return spec;
}

VarId DerivationSpec::var(const std::string& symbol, unsigned order) const {
    auto v = try_var(symbol, order);
    if (!v) fail(Errc::undeclared_symbol, symbol);
    return *v;
}

std::optional<VarId> DerivationSpec::try_var(const std::string& symbol, unsigned order) const {
    auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
    if (it == symbols_.end()) return std::nullopt;
    if (backend_ == Backend::RatFunc && order > 0) return std::nullopt;
    if (order >= kMaxJetOrder) fail(Errc::syntax_error, "jet order too large");
    return static_cast<VarId>((it - symbols_.begin()) * kMaxJetOrder + order);
}

std::pair<std::size_t, unsigned> DerivationSpec::jet_of(VarId v) const {
    return {v / kMaxJetOrder, v % kMaxJetOrder};
}

std::string DerivationSpec::var_name(VarId v) const {
    auto [sym, ord] = jet_of(v);
    std::string s = symbols_.at(sym);
    s.append(ord, '\'');
    return s;
}

std::optional<unsigned> DerivationSpec::threshold(std::size_t symbol_index) const {
    auto it = rule_by_symbol_.find(symbol_index);
    if (it == rule_by_symbol_.end()) return std::nullopt;
    return it->second.first;
}

MPoly DerivationSpec::prolonged_rhs(std::size_t symbol_index, unsigned order) const {
    VarId key = static_cast<VarId>(symbol_index * kMaxJetOrder + order);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = prolonged_cache_.find(key);
        if (it != prolonged_cache_.end()) return it->second;
    }
    auto& base = rule_by_symbol_.at(symbol_index);
    MPoly rhs;
    if (order == base.first) {
        rhs = base.second;
    } else {
        MPoly prev = prolonged_rhs(symbol_index, order - 1);
        rhs = derive_poly(prev);
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    prolonged_cache_.emplace(key, rhs);
    return rhs;
}

MPoly DerivationSpec::reduce(MPoly p) const {
    if (backend_ == Backend::RatFunc || rule_by_symbol_.empty()) return p;
    for (int steps = 0; steps < 100000; ++steps) {
        // Highest-order reducible jet present.
        std::optional<VarId> target;
        unsigned best_order = 0;
        for (VarId v : p.variables()) {
            auto [sym, ord] = jet_of(v);
            auto thr = threshold(sym);
            if (thr && ord >= *thr && (!target || ord > best_order)) {
                target = v;
                best_order = ord;
            }
        }
        if (!target) return p;
        auto [sym, ord] = jet_of(*target);
        p = p.substitute(*target, prolonged_rhs(sym, ord));
    }
    fail(Errc::syntax_error, "rewrite system does not terminate");
}

MPoly DerivationSpec::derive_poly(const MPoly& p) const {
    MPoly r;
    for (auto& [m, c] : p.terms()) {
        for (auto& [v, e] : m.factors) {
            MPoly part;
            part.add_term(*m.divide(Monomial::var(v)), c * GaussianRational(Rational(e)));
            r += var_derivative(v) * part;
        }
    }
    return reduce(r);
}

MPoly DerivationSpec::var_derivative(VarId v) const {
    if (backend_ == Backend::RatFunc) {
        if (v != 0) fail(Errc::undeclared_symbol, "unknown variable id");
        return gen_derivative_;
    }
    auto [sym, ord] = jet_of(v);
    auto thr = threshold(sym);
    if (thr && ord + 1 >= *thr) return reduce(MPoly::var(var(symbols_.at(sym), ord + 1)));
    return MPoly::var(var(symbols_.at(sym), ord + 1));
}

FieldElement::FieldElement(SpecPtr spec, MPoly num, MPoly den)
    : spec_(std::move(spec)), num_(std::move(num)), den_(std::move(den)) {
    if (!spec_) fail(Errc::domain_mismatch, "field element without a derivation spec");
    if (den_.is_zero()) fail(Errc::division_by_zero, "zero denominator");
    normalize();
}

void FieldElement::normalize() {
    num_ = spec_->reduce(std::move(num_));
    den_ = spec_->reduce(std::move(den_));
    if (den_.is_zero()) fail(Errc::division_by_zero, "denominator reduced to zero");
    if (num_.is_zero()) {
        den_ = MPoly::constant(GaussianRational::one());
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = mpoly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
    }
    GaussianRational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        auto inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

void FieldElement::require_same_spec(const FieldElement& o) const {
    if (spec_ != o.spec_) fail(Errc::domain_mismatch, "field elements from different derivation specs");
}

std::optional<GaussianRational> FieldElement::as_rational() const {
    if (!spec_) return std::nullopt;
    auto n = num_.as_constant();
    auto d = den_.as_constant();
    if (n && d) return *n / *d;
    return std::nullopt;
}

FieldElement FieldElement::operator-() const { return FieldElement(spec_, -num_, den_); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_spec(o);
    return FieldElement(spec_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_spec(o);
    return FieldElement(spec_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_spec(o);
    return FieldElement(spec_, num_ * o.num_, den_ * o.den_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_spec(o);
    if (o.is_zero()) fail(Errc::division_by_zero, "field division by zero");
    return FieldElement(spec_, num_ * o.den_, den_ * o.num_);
}

bool FieldElement::operator==(const FieldElement& o) const {
    require_same_spec(o);
    return num_ == o.num_ && den_ == o.den_;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
    return FieldElement(spec_, den_, num_);
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement r = one_like();
    FieldElement b = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

FieldElement FieldElement::derive() const {
    MPoly dn = spec_->derive_poly(num_);
    if (den_.is_constant()) return FieldElement(spec_, dn, den_);
    MPoly dd = spec_->derive_poly(den_);
    return FieldElement(spec_, dn * den_ - num_ * dd, den_ * den_);
}

} // namespace modo
