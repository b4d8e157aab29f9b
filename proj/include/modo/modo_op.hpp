#ifndef MODO_MODO_OP_HPP
#define MODO_MODO_OP_HPP

#include "modo/matrix.hpp"

namespace modo {

/// Matrix ordinary differential operator: sum A_j D^j with A_j square
/// matrices over K, in coefficient-left normal form. Multiplication uses
/// D A = A D + A', so D^k A = sum_j C(k,j) A^(j) D^(k-j).
class Modo {
  public:
    Modo(SpecPtr spec, std::size_t ell, std::vector<Mat<FieldElement>> coeffs);
    static Modo zero(SpecPtr spec, std::size_t ell);
    static Modo identity(SpecPtr spec, std::size_t ell);
    static Modo from_matrix(Mat<FieldElement> a0);
    /// D^k with identity coefficient.
    static Modo d_power(SpecPtr spec, std::size_t ell, unsigned k);

    const SpecPtr& spec() const { return spec_; }
    std::size_t size() const { return ell_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Order of the operator; -1 for the zero operator.
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// A_k, a zero matrix beyond the order.
    Mat<FieldElement> coeff(std::size_t k) const;
    const std::vector<Mat<FieldElement>>& coeffs() const { return coeffs_; }
    const Mat<FieldElement>& leading_coeff() const;

    FieldElement zero_scalar() const { return FieldElement::constant(spec_, GaussianRational::zero()); }
    FieldElement one_scalar() const { return FieldElement::constant(spec_, GaussianRational::one()); }

    Modo operator-() const;
    Modo operator+(const Modo& o) const;
    Modo operator-(const Modo& o) const;
    Modo operator*(const Modo& o) const;
    Modo& operator+=(const Modo& o) { return *this = *this + o; }
    Modo& operator-=(const Modo& o) { return *this = *this - o; }
    Modo& operator*=(const Modo& o) { return *this = *this * o; }
    bool operator==(const Modo& o) const;
    bool operator!=(const Modo& o) const { return !(*this == o); }

    /// Left multiplication by a matrix (an order-zero operator).
    Modo scale_left(const Mat<FieldElement>& m) const;
    Modo scale(const FieldElement& c) const;

    Modo pow(unsigned e) const;

    /// Subtract a scalar-matrix shift: this - c*I (used for L - lambda0).
    Modo shift_by(const FieldElement& c) const;

  private:
    void normalize();
    void check_compat(const Modo& o) const;

    SpecPtr spec_;
    std::size_t ell_ = 0;
    std::vector<Mat<FieldElement>> coeffs_;
};

/// PQ - QP.
Modo commutator(const Modo& p, const Modo& q);

// Ring glue so polynomials evaluate at operator pairs.
inline Modo ring_zero_like(const Modo& x) { return Modo::zero(x.spec(), x.size()); }
inline Modo ring_one_like(const Modo& x) { return Modo::identity(x.spec(), x.size()); }
inline Modo ring_scale(const Modo& x, const GaussianRational& c) {
    return x.scale(FieldElement::constant(x.spec(), c));
}
inline Modo ring_scale(const Modo& x, const FieldElement& c) { return x.scale(c); }

/// g(L, B) for a polynomial with constant coefficients and a commuting
/// pair. The commutation precondition is enforced; pass allow_noncommuting
/// to evaluate anyway (lambda powers left of mu powers), e.g. to inspect a
/// counterexample.
template <class C>
Modo op_eval_poly(const LmPoly<C>& g, const Modo& L, const Modo& B, bool allow_noncommuting = false) {
    for (auto& [e, c] : g.terms())
        if (!coeff_is_zero(coeff_derive(c)))
            fail(Errc::nonconstant_coefficients, "polynomial coefficients must be differential constants");
    if (!allow_noncommuting && !commutator(L, B).is_zero())
        fail(Errc::noncommuting_pair, "operators do not commute; evaluation would be order-dependent");
    return bp_eval_commuting(g, L, B);
}

} // namespace modo

#endif
