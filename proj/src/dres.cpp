#include "modo/dres.hpp"

namespace modo {

Mat<FieldElement> companion(const Modo& p) {
    if (p.order() != 1) fail(Errc::wrong_order, "companion matrix needs an order-one operator");
    Mat<FieldElement> a1 = p.coeff(1);
    if (a1.det().is_zero()) fail(Errc::singular_leading_coefficient, "leading coefficient is not invertible");
    return -(mat_inv(a1) * p.coeff(0));
}

Mat<FieldElement> m_matrix(const Modo& p, const Modo& q) {
    Mat<FieldElement> n = companion(p);
    if (q.is_zero()) return Mat<FieldElement>::zero(p.size(), p.zero_scalar());
    unsigned ord = static_cast<unsigned>(q.order());
    auto ps = p_seq(n, ord, p.one_scalar());
    Mat<FieldElement> m = Mat<FieldElement>::zero(p.size(), p.zero_scalar());
    for (unsigned j = 0; j <= ord; ++j) {
        Mat<FieldElement> bj = q.coeff(j);
        if (bj.is_zero()) continue;
        m = m + bj * ps[j];
    }
    return m;
}

FieldElement dres(const Modo& p, const Modo& q) { return m_matrix(p, q).det(); }

Mat<SpectralPoly> spectral_matrix(const Modo& l, const Modo& b) {
    if (l.order() != 1) fail(Errc::wrong_order, "spectral matrix needs an order-one left operator");
    Mat<FieldElement> a1 = l.coeff(1);
    if (a1.det().is_zero()) fail(Errc::singular_leading_coefficient, "leading coefficient is not invertible");

    std::size_t ell = l.size();
    FieldElement one = l.one_scalar();
    SpectralPoly sone = SpectralPoly::constant(one);
    SpectralPoly lambda = SpectralPoly::lambda(one);
    SpectralPoly mu = SpectralPoly::mu(one);

    // N_lambda = -A1^{-1} (A0 - lambda I)
    Mat<SpectralPoly> a0 = lift_spectral(l.coeff(0));
    Mat<SpectralPoly> a1_inv_neg = lift_spectral(-mat_inv(a1));
    Mat<SpectralPoly> n_lambda = a1_inv_neg * (a0 - Mat<SpectralPoly>::scalar(ell, lambda));

    unsigned ord = b.is_zero() ? 0 : static_cast<unsigned>(b.order());
    auto ps = p_seq(n_lambda, ord, sone);

    // M = sum_j B_j p_j(N_lambda) - mu I
    Mat<SpectralPoly> m = -Mat<SpectralPoly>::scalar(ell, mu);
    for (unsigned j = 0; j <= ord; ++j) {
        Mat<FieldElement> bj = b.coeff(j);
        if (bj.is_zero()) continue;
        m = m + lift_spectral(bj) * ps[j];
    }
    return m;
}

CurveReport spectral_curve(const Modo& l, const Modo& b) {
    CurveReport report;
    report.ell = l.size();
    report.order_b = b.order();
    report.curve = spectral_matrix(l, b).det();
    report.commutator_is_zero = commutator(l, b).is_zero();

    bool constant = true;
    for (auto& [e, c] : report.curve.terms())
        if (!c.derive().is_zero()) {
            constant = false;
            break;
        }
    report.constancy_verified = constant;
    if (report.commutator_is_zero && !constant)
        fail(Errc::nonconstant_coefficients,
             "commuting pair produced a spectral curve with non-constant coefficients");

    report.curve_rational = lm_to_rational(report.curve);
    report.degree_mu = report.curve.degree_mu();
    report.degree_lambda = report.curve.degree_lambda();
    FieldElement zero = l.zero_scalar();
    report.leading_mu_coeff = report.curve.coeff(0, report.degree_mu, zero);
    unsigned n = report.order_b < 0 ? 0 : static_cast<unsigned>(report.order_b);
    report.lambda_top_coeff = report.curve.coeff(static_cast<std::uint32_t>(n * report.ell), 0, zero);
    report.lambda_top_rational = report.lambda_top_coeff.as_rational();
    return report;
}

} // namespace modo
