#include "modo/modo_op.hpp"

namespace modo {

Modo::Modo(SpecPtr spec, std::size_t ell, std::vector<Mat<FieldElement>> coeffs)
    : spec_(std::move(spec)), ell_(ell), coeffs_(std::move(coeffs)) {
    if (ell_ == 0) fail(Errc::dimension_mismatch, "operator size must be positive");
    for (auto& m : coeffs_)
        if (m.size() != ell_) fail(Errc::dimension_mismatch, "coefficient matrix size mismatch");
    normalize();
}

void Modo::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Modo Modo::zero(SpecPtr spec, std::size_t ell) { return Modo(std::move(spec), ell, {}); }

Modo Modo::identity(SpecPtr spec, std::size_t ell) {
    FieldElement one = FieldElement::constant(spec, GaussianRational::one());
    return Modo(spec, ell, {Mat<FieldElement>::identity(ell, one)});
}

Modo Modo::from_matrix(Mat<FieldElement> a0) {
    SpecPtr spec = a0.sample().spec();
    std::size_t ell = a0.size();
    return Modo(std::move(spec), ell, {std::move(a0)});
}

Modo Modo::d_power(SpecPtr spec, std::size_t ell, unsigned k) {
    FieldElement one = FieldElement::constant(spec, GaussianRational::one());
    std::vector<Mat<FieldElement>> coeffs(k + 1, Mat<FieldElement>::zero(ell, one));
    coeffs[k] = Mat<FieldElement>::identity(ell, one);
    return Modo(std::move(spec), ell, std::move(coeffs));
}

Mat<FieldElement> Modo::coeff(std::size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return Mat<FieldElement>::zero(ell_, zero_scalar());
}

const Mat<FieldElement>& Modo::leading_coeff() const {
    if (coeffs_.empty()) fail(Errc::zero_input, "leading coefficient of the zero operator");
    return coeffs_.back();
}

void Modo::check_compat(const Modo& o) const {
    if (ell_ != o.ell_) fail(Errc::dimension_mismatch, "operator size mismatch");
    if (spec_ != o.spec_) fail(Errc::domain_mismatch, "operators over different coefficient fields");
}

Modo Modo::operator-() const {
    std::vector<Mat<FieldElement>> c;
    c.reserve(coeffs_.size());
    for (auto& m : coeffs_) c.push_back(-m);
    return Modo(spec_, ell_, std::move(c));
}

Modo Modo::operator+(const Modo& o) const {
    check_compat(o);
    std::vector<Mat<FieldElement>> c;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    c.reserve(n);
    for (std::size_t k = 0; k < n; ++k) c.push_back(coeff(k) + o.coeff(k));
    return Modo(spec_, ell_, std::move(c));
}

Modo Modo::operator-(const Modo& o) const {
    check_compat(o);
    std::vector<Mat<FieldElement>> c;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    c.reserve(n);
    for (std::size_t k = 0; k < n; ++k) c.push_back(coeff(k) - o.coeff(k));
    return Modo(spec_, ell_, std::move(c));
}

Modo Modo::operator*(const Modo& o) const {
    check_compat(o);
    if (is_zero() || o.is_zero()) return Modo::zero(spec_, ell_);
    std::size_t n = coeffs_.size() - 1 + o.coeffs_.size() - 1;
    std::vector<Mat<FieldElement>> c(n + 1, Mat<FieldElement>::zero(ell_, zero_scalar()));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            // A_j D^j * B_k D^k = sum_m C(j,m) A_j B_k^(m) D^(j+k-m)
            Mat<FieldElement> derived = o.coeffs_[k];
            for (std::size_t m = 0; m <= j; ++m) {
                if (m > 0) derived = derived.derive();
                if (derived.is_zero()) continue;
                Int binom = binomial(static_cast<unsigned>(j), static_cast<unsigned>(m));
                FieldElement factor = FieldElement::constant(spec_, GaussianRational(Rational(binom)));
                c[j + k - m] = c[j + k - m] + (coeffs_[j] * derived) * factor;
            }
        }
    }
    return Modo(spec_, ell_, std::move(c));
}

bool Modo::operator==(const Modo& o) const {
    check_compat(o);
    return coeffs_ == o.coeffs_;
}

Modo Modo::scale_left(const Mat<FieldElement>& m) const {
    std::vector<Mat<FieldElement>> c;
    c.reserve(coeffs_.size());
    for (auto& a : coeffs_) c.push_back(m * a);
    return Modo(spec_, ell_, std::move(c));
}

Modo Modo::scale(const FieldElement& c) const {
    std::vector<Mat<FieldElement>> v;
    v.reserve(coeffs_.size());
    for (auto& a : coeffs_) v.push_back(a * c);
    return Modo(spec_, ell_, std::move(v));
}

Modo Modo::pow(unsigned e) const {
    Modo r = Modo::identity(spec_, ell_);
    Modo b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Modo Modo::shift_by(const FieldElement& c) const {
    Mat<FieldElement> shift = Mat<FieldElement>::scalar(ell_, c);
    return *this - Modo(spec_, ell_, {shift});
}

Modo commutator(const Modo& p, const Modo& q) { return p * q - q * p; }

} // namespace modo
