#include "modo/spectral_point.hpp"

#include <algorithm>

namespace modo {

bool on_curve(const BivarPoly& f, const CurvePoint& pt) {
    return f.eval_point(pt.lambda0, pt.mu0, GaussianRational::zero()).is_zero();
}

bool on_curve(const SpectralPoly& f, const CurvePoint& pt, const SpecPtr& spec) {
    FieldElement like = FieldElement::constant(spec, GaussianRational::zero());
    return f.eval_point(pt.lambda0, pt.mu0, like).is_zero();
}

Mat<FieldElement> specialize(const Mat<SpectralPoly>& m, const CurvePoint& pt, const SpecPtr& spec) {
    FieldElement zero = FieldElement::constant(spec, GaussianRational::zero());
    Mat<FieldElement> r = Mat<FieldElement>::zero(m.size(), zero);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r.at(i, j) = m.at(i, j).eval_point(pt.lambda0, pt.mu0, zero);
    return r;
}

KernelBasis kernel_at_point(const Modo& l, const Modo& b, const CurvePoint& pt) {
    Mat<FieldElement> m = specialize(spectral_matrix(l, b), pt, l.spec());
    std::size_t n = m.size();

    // Row echelon form, first nonzero pivot in column order.
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && m.at(p, col).is_zero()) ++p;
        if (p == n) continue;
        if (p != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(row, j), m.at(p, j));
        FieldElement inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < n; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            FieldElement factor = m.at(i, col);
            for (std::size_t j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - factor * m.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }

    KernelBasis basis;
    basis.rank = pivot_col.size();
    basis.nullity = n - basis.rank;
    FieldElement zero = l.zero_scalar();
    FieldElement one = l.one_scalar();
    for (std::size_t col = 0; col < n; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        std::vector<FieldElement> v(n, zero);
        v[col] = one;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m.at(r, col);
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

SpectralFraction phi_ratio(const Modo& l, const Modo& b) {
    if (l.size() != 2) fail(Errc::dimension_mismatch, "phi ratio is defined for 2x2 operators");
    Mat<SpectralPoly> m = spectral_matrix(l, b);
    if (m.at(0, 1).is_zero()) fail(Errc::zero_denominator_entry, "M12 vanishes identically");
    return SpectralFraction{-m.at(0, 0), m.at(0, 1)};
}

std::pair<FieldElement, FieldElement> akns_potentials(const Modo& l) {
    if (l.size() != 2 || l.order() != 1) fail(Errc::not_akns_shape, "expected an order-one 2x2 operator");
    FieldElement iu = FieldElement::constant(l.spec(), GaussianRational::imaginary_unit());
    Mat<FieldElement> a1 = l.coeff(1);
    if (a1.at(0, 0) != iu || a1.at(1, 1) != -iu || !a1.at(0, 1).is_zero() || !a1.at(1, 0).is_zero())
        fail(Errc::not_akns_shape, "leading coefficient is not i*diag(1,-1)");
    Mat<FieldElement> a0 = l.coeff(0);
    if (!a0.at(0, 0).is_zero() || !a0.at(1, 1).is_zero())
        fail(Errc::not_akns_shape, "zero-order coefficient has nonzero diagonal");
    return {a0.at(0, 1) / iu, a0.at(1, 0) / iu};
}

SpectralFraction riccati_residual(const Modo& l, const Modo& b) {
    auto [u, v] = akns_potentials(l);
    Mat<SpectralPoly> m = spectral_matrix(l, b);
    if (m.at(0, 1).is_zero()) fail(Errc::zero_denominator_entry, "M12 vanishes identically");
    SpectralPoly n = -m.at(0, 0);
    SpectralPoly d = m.at(0, 1);
    SpectralPoly f = m.det();

    FieldElement one = l.one_scalar();
    SpectralPoly u_sp = SpectralPoly::constant(u);
    SpectralPoly v_sp = SpectralPoly::constant(v);
    SpectralPoly two_i_lambda =
        SpectralPoly::lambda(one) * FieldElement::constant(l.spec(), GaussianRational(Rational(0), Rational(2)));

    // phi = n/d satisfies phi' - u phi^2 - 2 i lambda phi - v = -u f / d^2
    // (the f term carries the square of the kernel-row denominator; at
    // on-curve points both sides vanish and phi_P solves the plain
    // Riccati equation). The residual is the difference, over d^2.
    SpectralPoly numerator = n.derive() * d - n * d.derive() - u_sp * n * n - two_i_lambda * n * d - v_sp * d * d +
                             u_sp * f;
    return SpectralFraction{numerator, d * d};
}

} // namespace modo
