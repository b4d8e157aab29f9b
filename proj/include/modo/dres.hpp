#ifndef MODO_DRES_HPP
#define MODO_DRES_HPP

#include <optional>

#include "modo/modo_op.hpp"

namespace modo {

/// Companion matrix of an order-one operator with invertible leading
/// coefficient: N = -A1^{-1} A0, so that PY = 0 becomes DY = NY.
Mat<FieldElement> companion(const Modo& p);

/// The recursion p_0 = I, p_j = p_{j-1} N + (p_{j-1})', which expresses
/// D^j on solutions of DY = NY. Works over K and over K[lambda, mu].
template <class R>
std::vector<Mat<R>> p_seq(const Mat<R>& n, unsigned count, const R& one_like) {
    std::vector<Mat<R>> p{Mat<R>::identity(n.size(), one_like)};
    for (unsigned j = 1; j <= count; ++j) p.push_back(p.back() * n + p.back().derive());
    return p;
}

/// M(P,Q) = sum_j B_j p_j(N) for P of order one.
Mat<FieldElement> m_matrix(const Modo& p, const Modo& q);

/// Matrix differential resultant DRes(P,Q) = det M(P,Q).
FieldElement dres(const Modo& p, const Modo& q);

/// M(L - lambda, B - mu) over K[lambda, mu].
Mat<SpectralPoly> spectral_matrix(const Modo& l, const Modo& b);

struct CurveReport {
    /// f(lambda, mu) = DRes(L - lambda, B - mu), over K[lambda, mu].
    SpectralPoly curve;
    /// The same polynomial over Q(i) when every coefficient embeds.
    std::optional<BivarPoly> curve_rational;
    bool commutator_is_zero = false;
    /// Every coefficient of f has zero derivative.
    bool constancy_verified = false;
    std::uint32_t degree_mu = 0;
    std::uint32_t degree_lambda = 0;
    std::size_t ell = 0;
    int order_b = 0;
    /// Coefficient of mu^ell; (-1)^ell by the degree lemma.
    FieldElement leading_mu_coeff;
    /// Coefficient of lambda^(n*ell); det(B_n) det(A1^{-1})^n when B has order n.
    FieldElement lambda_top_coeff;
    std::optional<GaussianRational> lambda_top_rational;
};

/// Spectral curve of the pair: determinant of the spectral matrix. For a
/// commuting pair every coefficient must have zero derivative (checked; a
/// residue is a hard error). A non-commuting pair still gets its
/// determinant, flagged via commutator_is_zero.
CurveReport spectral_curve(const Modo& l, const Modo& b);

} // namespace modo

#endif
