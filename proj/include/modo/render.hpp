#ifndef MODO_RENDER_HPP
#define MODO_RENDER_HPP

#include <string>

#include "modo/bc.hpp"
#include "modo/spectral_point.hpp"

namespace modo {

// Canonical, deterministic string forms. These are the golden-test
// contract: exact rationals as a+b*i, ^ for powers, terms in the canonical
// order of each ring. Everything round-trips through the parser.

std::string render(const Rational& r);
std::string render(const GaussianRational& z);
std::string render(const MPoly& p, const SpecPtr& spec);
std::string render(const FieldElement& x);
std::string render(const BivarPoly& p);
std::string render(const SpectralPoly& p);
std::string render(const Mat<FieldElement>& m);
std::string render(const Modo& op);
std::string render(const SpectralFraction& f);

std::string render(const LmFactorization<FieldElement>& fac);
std::string render(const Factorization& fac);

/// "C[lambda,mu]/(h)" or "C[lambda,mu]/((h)^r)".
std::string render_quotient(const SpectralPoly& h, unsigned r);

} // namespace modo

#endif
