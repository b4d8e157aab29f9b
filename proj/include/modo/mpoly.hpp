#ifndef MODO_MPOLY_HPP
#define MODO_MPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "modo/rational.hpp"

namespace modo {

using VarId = std::uint32_t;

/// Power product over VarId, kept sorted by variable id with positive exponents.
struct Monomial {
    std::vector<std::pair<VarId, std::uint32_t>> factors;

    Monomial() = default;
    static Monomial var(VarId v, std::uint32_t e = 1) {
        Monomial m;
        if (e > 0) m.factors.emplace_back(v, e);
        return m;
    }

    bool is_one() const { return factors.empty(); }
    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto& [v, e] : factors) d += e;
        return d;
    }
    std::uint32_t degree_in(VarId v) const {
        for (auto& [w, e] : factors)
            if (w == v) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const;
    /// this / o if o divides this.
    std::optional<Monomial> divide(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return factors == o.factors; }
};

/// Term order: total degree descending, then lexicographic with the lowest
/// variable id most significant (higher exponent on an earlier variable
/// sorts first). This fixes iteration and rendering order everywhere.
struct MonomialOrder {
    // "less" in map terms means "comes first".
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q(i). Used both for differential
/// polynomials in jet variables and for rational-function numerators and
/// denominators over a single generator.
class MPoly {
  public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialOrder>;

    MPoly() = default;
    explicit MPoly(GaussianRational c) {
        if (!c.is_zero()) terms_[Monomial()] = std::move(c);
    }
    static MPoly constant(GaussianRational c) { return MPoly(std::move(c)); }
    static MPoly var(VarId v, std::uint32_t e = 1) {
        MPoly p;
        p.terms_[Monomial::var(v, e)] = GaussianRational::one();
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    std::optional<GaussianRational> as_constant() const {
        if (terms_.empty()) return GaussianRational::zero();
        if (is_constant()) return terms_.begin()->second;
        return std::nullopt;
    }

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t total_degree() const;
    std::uint32_t degree_in(VarId v) const;
    bool contains_var(VarId v) const { return degree_in(v) > 0; }
    std::vector<VarId> variables() const;

    /// First term in canonical order.
    const std::pair<const Monomial, GaussianRational>& leading() const;
    const GaussianRational& leading_coeff() const { return leading().second; }

    void add_term(const Monomial& m, const GaussianRational& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const GaussianRational& c) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(std::uint32_t e) const;

    /// Exact division; nullopt if o does not divide this.
    std::optional<MPoly> divide_exact(const MPoly& o) const;

    /// Partial derivative with respect to one variable (formal).
    MPoly formal_derivative(VarId v) const;

    /// Substitute variable v by a polynomial.
    MPoly substitute(VarId v, const MPoly& value) const;

    /// View as univariate in v: map degree -> coefficient polynomial.
    std::map<std::uint32_t, MPoly> univariate_in(VarId v) const;
    static MPoly from_univariate(VarId v, const std::map<std::uint32_t, MPoly>& coeffs);

    /// Divide every coefficient so the leading coefficient becomes 1.
    MPoly monic() const;

  private:
    TermMap terms_;
};

/// gcd in Q(i)[vars], computed by recursive primitive remainder sequences.
/// The result is normalized to leading coefficient 1; gcd(0,0) is an error.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

} // namespace modo

#endif
