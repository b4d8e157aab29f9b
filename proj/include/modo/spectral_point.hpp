#ifndef MODO_SPECTRAL_POINT_HPP
#define MODO_SPECTRAL_POINT_HPP

#include "modo/dres.hpp"

namespace modo {

struct CurvePoint {
    GaussianRational lambda0;
    GaussianRational mu0;
};

/// Exact membership test f(lambda0, mu0) = 0.
bool on_curve(const BivarPoly& f, const CurvePoint& pt);
bool on_curve(const SpectralPoly& f, const CurvePoint& pt, const SpecPtr& spec);

struct KernelBasis {
    std::vector<std::vector<FieldElement>> vectors;
    std::size_t rank = 0;
    std::size_t nullity = 0;
};

/// Null space of M(L - lambda0, B - mu0) over K, by Gaussian elimination
/// with the first nonzero pivot in column order. Nonempty exactly when the
/// point lies on the spectral curve.
KernelBasis kernel_at_point(const Modo& l, const Modo& b, const CurvePoint& pt);

/// Specialize a spectral matrix at a point.
Mat<FieldElement> specialize(const Mat<SpectralPoly>& m, const CurvePoint& pt, const SpecPtr& spec);

struct SpectralFraction {
    SpectralPoly num;
    SpectralPoly den;
    bool is_zero() const { return num.is_zero(); }
};

/// phi = -M11/M12 of the 2x2 spectral matrix, the ratio psi2/psi1 cut out
/// by the first-row relation of the kernel.
SpectralFraction phi_ratio(const Modo& l, const Modo& b);

/// Left-hand side of the Riccati identity, as a single exact fraction:
/// phi' - u phi^2 - 2 i lambda phi - v + u f. Identically zero for the
/// AKNS family. L must look like i[[D, u],[v, -D]].
SpectralFraction riccati_residual(const Modo& l, const Modo& b);

/// u and v read off an AKNS-shaped L; NOT_AKNS_SHAPE otherwise.
std::pair<FieldElement, FieldElement> akns_potentials(const Modo& l);

} // namespace modo

#endif
