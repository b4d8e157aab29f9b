#ifndef MODO_BC_HPP
#define MODO_BC_HPP

#include <optional>

#include "modo/dres.hpp"
#include "modo/lmfactor.hpp"

namespace modo {

/// True iff g(L,B) is the zero operator (g a Burchnall-Chaundy polynomial
/// of the pair). Requires a commuting pair.
template <class C>
bool is_bc(const LmPoly<C>& g, const Modo& l, const Modo& b) {
    if (!commutator(l, b).is_zero()) fail(Errc::noncommuting_pair, "is_bc needs a commuting pair");
    return op_eval_poly(g, l, b, true).is_zero();
}

struct BCFactor {
    SpectralPoly h;
    unsigned sigma = 0;
    unsigned r = 0;
};

struct BCReport {
    CurveReport curve;
    bool f_is_bc = false;
    /// f(L,B), kept when it is nonzero; the generator machinery needs
    /// f(L,B) = 0, so nothing below is filled in that case.
    std::optional<Modo> f_of_pair;

    SpectralPoly f_red;
    std::vector<BCFactor> factors;
    /// F = prod h_i^{r_i}, the generator of BC(L,B).
    SpectralPoly generator;
    /// Quotient descriptors C[lambda,mu]/(h_i^{r_i}) of the ring decomposition.
    std::vector<std::pair<SpectralPoly, unsigned>> decomposition;
    /// h = mu - R(lambda) when B = R(L) was detected.
    std::optional<SpectralPoly> trivial_case;
    bool used_user_factorization = false;
};

/// Minimal exponents of the BC-generator algorithm: for each factor the
/// least r_i in [1, sigma_i] such that the product with the other factors
/// held at sigma vanishes at (L,B). The joint product at the minima is
/// verified and must vanish.
std::vector<unsigned> minimal_exponents(const std::vector<std::pair<SpectralPoly, unsigned>>& factors, const Modo& l,
                                        const Modo& b);

/// If B = R(L) for a polynomial R with constant coefficients, return R as a
/// polynomial in lambda.
std::optional<SpectralPoly> poly_in_l(const Modo& l, const Modo& b);

/// The BC-generator algorithm: spectral curve, the f(L,B) = 0 check,
/// restricted factorization (or the supplied one, verified), minimal
/// exponents, and the ring decomposition.
BCReport bc_generator(const Modo& l, const Modo& b,
                      const std::optional<LmFactorization<FieldElement>>& user_factorization = std::nullopt);

} // namespace modo

#endif
