#ifndef MODO_MATRIX_HPP
#define MODO_MATRIX_HPP

#include <vector>

#include "modo/lmpoly.hpp"

namespace modo {

// Ring glue for matrix entries (FieldElement or SpectralPoly).
inline FieldElement entry_derive(const FieldElement& x) { return x.derive(); }
inline SpectralPoly entry_derive(const SpectralPoly& x) { return x.derive(); }
inline FieldElement entry_zero(const FieldElement& like) { return like.zero_like(); }
inline FieldElement entry_one(const FieldElement& like) { return like.one_like(); }
inline SpectralPoly entry_zero(const SpectralPoly&) { return SpectralPoly(); }
inline SpectralPoly entry_one(const SpectralPoly& like);
inline bool entry_is_zero(const FieldElement& x) { return x.is_zero(); }
inline bool entry_is_zero(const SpectralPoly& x) { return x.is_zero(); }

/// Square matrix over a commutative differential ring R with entrywise
/// derivation. R is FieldElement for matrices over K and SpectralPoly for
/// the spectral lift over K[lambda, mu].
template <class R>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t ell, const R& fill) : ell_(ell), e_(ell * ell, fill) {
        if (ell == 0) fail(Errc::dimension_mismatch, "empty matrix");
    }
    static Mat zero(std::size_t ell, const R& like) { return Mat(ell, entry_zero(like)); }
    static Mat identity(std::size_t ell, const R& like) {
        Mat m = zero(ell, like);
        for (std::size_t k = 0; k < ell; ++k) m.at(k, k) = entry_one(like);
        return m;
    }
    static Mat scalar(std::size_t ell, const R& value) {
        Mat m = zero(ell, value);
        for (std::size_t k = 0; k < ell; ++k) m.at(k, k) = value;
        return m;
    }

    std::size_t size() const { return ell_; }
    R& at(std::size_t r, std::size_t c) { return e_.at(r * ell_ + c); }
    const R& at(std::size_t r, std::size_t c) const { return e_.at(r * ell_ + c); }
    const R& sample() const { return e_.front(); }

    bool is_zero() const {
        for (auto& x : e_)
            if (!entry_is_zero(x)) return false;
        return true;
    }
    bool operator==(const Mat& o) const { return ell_ == o.ell_ && e_ == o.e_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }
    Mat operator+(const Mat& o) const {
        check_size(o);
        Mat r = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] + o.e_[k];
        return r;
    }
    Mat operator-(const Mat& o) const {
        check_size(o);
        Mat r = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] - o.e_[k];
        return r;
    }
    Mat operator*(const Mat& o) const {
        check_size(o);
        Mat r = zero(ell_, sample());
        for (std::size_t i = 0; i < ell_; ++i)
            for (std::size_t k = 0; k < ell_; ++k) {
                const R& a = at(i, k);
                if (entry_is_zero(a)) continue;
                for (std::size_t j = 0; j < ell_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        return r;
    }
    Mat operator*(const R& c) const {
        Mat r = *this;
        for (auto& x : r.e_) x = x * c;
        return r;
    }

    /// Entrywise derivation D(A) = A'.
    Mat derive() const {
        Mat r = *this;
        for (auto& x : r.e_) x = entry_derive(x);
        return r;
    }

    /// Exact determinant: cofactor expansion for ell <= 4 (and for rings
    /// without division), fraction-free Bareiss over the fraction field for
    /// larger matrices of field elements.
    R det() const;

    Mat pow(unsigned e) const {
        Mat r = identity(ell_, sample());
        Mat b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

  private:
    void check_size(const Mat& o) const {
        if (ell_ != o.ell_) fail(Errc::dimension_mismatch, "matrix size mismatch");
    }

    R det_cofactor() const;

    std::size_t ell_ = 0;
    std::vector<R> e_;
};

inline SpectralPoly entry_one(const SpectralPoly& like) {
    if (like.is_zero()) fail(Errc::domain_mismatch, "spectral one needs a nonzero sample for its field");
    return SpectralPoly::constant(coeff_one(like.leading_coeff()));
}

template <class R>
R Mat<R>::det_cofactor() const {
    if (ell_ == 1) return at(0, 0);
    if (ell_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    R result = entry_zero(sample());
    for (std::size_t r = 0; r < ell_; ++r) {
        if (entry_is_zero(at(r, 0))) continue;
        Mat minor = Mat::zero(ell_ - 1, sample());
        for (std::size_t i = 0, mi = 0; i < ell_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 1; j < ell_; ++j) minor.at(mi, j - 1) = at(i, j);
            ++mi;
        }
        R term = at(r, 0) * minor.det_cofactor();
        result = (r % 2 == 0) ? result + term : result - term;
    }
    return result;
}

/// Bareiss elimination; entries must support exact division.
FieldElement det_bareiss(Mat<FieldElement> m);

template <class R>
R Mat<R>::det() const {
    return det_cofactor();
}

template <>
inline FieldElement Mat<FieldElement>::det() const {
    if (ell_ <= 4) return det_cofactor();
    return det_bareiss(*this);
}

/// Inverse over the coefficient field: adjugate divided by determinant.
Mat<FieldElement> mat_inv(const Mat<FieldElement>& m);

/// Lift a matrix over K into the spectral ring K[lambda, mu].
Mat<SpectralPoly> lift_spectral(const Mat<FieldElement>& m);

} // namespace modo

#endif
