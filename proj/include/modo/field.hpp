#ifndef MODO_FIELD_HPP
#define MODO_FIELD_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "modo/mpoly.hpp"

namespace modo {

/// A rewrite rule for a top jet: symbol^(order) -> rhs, where rhs only
/// involves strictly lower jets of that symbol (after reduction).
struct RewriteRule {
    std::string symbol;
    unsigned order = 0;
    MPoly rhs;
};

/// Description of the coefficient field K and its derivation.
///
/// Two backends:
///  - RatFunc: K = Q(i)(g) with a prescribed derivative g' given as a
///    polynomial in g (e.g. x' = 1, or t' = 2*i*t for t = e^{2ix}).
///  - DiffPoly: K is the fraction field of differential polynomials in a
///    list of symbols, reduced modulo a rewrite system (possibly empty,
///    which gives the free differential polynomial field).
class DerivationSpec {
  public:
    enum class Backend { RatFunc, DiffPoly };

    static constexpr unsigned kMaxJetOrder = 64;

    static std::shared_ptr<const DerivationSpec> rational_functions(std::string generator, MPoly generator_derivative);
    static std::shared_ptr<const DerivationSpec> differential_polynomials(std::vector<std::string> symbols,
                                                                          std::vector<RewriteRule> rules);

    Backend backend() const { return backend_; }
    const std::string& generator() const { return symbols_.at(0); }
    const MPoly& generator_derivative() const { return gen_derivative_; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    /// Variable id for a jet (symbol, order). Order 0 is the symbol itself.
    VarId var(const std::string& symbol, unsigned order) const;
    std::optional<VarId> try_var(const std::string& symbol, unsigned order) const;
    /// Inverse mapping: (symbol index, order).
    std::pair<std::size_t, unsigned> jet_of(VarId v) const;
    std::string var_name(VarId v) const;

    /// Derivative of a single variable, already reduced.
    MPoly var_derivative(VarId v) const;

    /// Rewrite every jet at or above its symbol's threshold. Identity for
    /// RatFunc and for symbols without rules.
    MPoly reduce(MPoly p) const;

    /// Reduced derivative of a polynomial.
    MPoly derive_poly(const MPoly& p) const;

  private:
    DerivationSpec() = default;

    std::optional<unsigned> threshold(std::size_t symbol_index) const;
    /// Fully reduced rewrite target for jet (symbol, order), order >= threshold.
    MPoly prolonged_rhs(std::size_t symbol_index, unsigned order) const;

    Backend backend_ = Backend::RatFunc;
    std::vector<std::string> symbols_;
    MPoly gen_derivative_;
    std::vector<RewriteRule> rules_;
    std::map<std::size_t, std::pair<unsigned, MPoly>> rule_by_symbol_;

    mutable std::mutex cache_mutex_;
    mutable std::map<VarId, MPoly> prolonged_cache_;
};

using SpecPtr = std::shared_ptr<const DerivationSpec>;

/// Element of the coefficient field K: a reduced fraction of multivariate
/// polynomials over Q(i) in the backend's generator or jet variables.
/// Normal form: gcd(num, den) = 1 and the denominator has leading
/// coefficient 1 under the canonical term order.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(SpecPtr spec, MPoly num, MPoly den);
    static FieldElement constant(SpecPtr spec, GaussianRational c) {
        return FieldElement(std::move(spec), MPoly::constant(std::move(c)), MPoly::constant(GaussianRational::one()));
    }
    static FieldElement from_poly(SpecPtr spec, MPoly p) {
        return FieldElement(std::move(spec), std::move(p), MPoly::constant(GaussianRational::one()));
    }
    static FieldElement variable(const SpecPtr& spec, const std::string& symbol, unsigned order = 0) {
        return from_poly(spec, MPoly::var(spec->var(symbol, order)));
    }

    const SpecPtr& spec() const { return spec_; }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    std::optional<GaussianRational> as_rational() const;
    bool is_polynomial() const { return den_.is_constant(); }

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement inverse() const;
    FieldElement pow(long e) const;

    /// Apply the derivation of K (quotient rule over the backend rule).
    FieldElement derive() const;
    bool is_constant() const { return derive().is_zero(); }

    FieldElement zero_like() const { return constant(spec_, GaussianRational::zero()); }
    FieldElement one_like() const { return constant(spec_, GaussianRational::one()); }

  private:
    void normalize();
    void require_same_spec(const FieldElement& o) const;

    SpecPtr spec_;
    MPoly num_;
    MPoly den_{GaussianRational::one()};
};

} // namespace modo

#endif
