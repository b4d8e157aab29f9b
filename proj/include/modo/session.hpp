#ifndef MODO_SESSION_HPP
#define MODO_SESSION_HPP

#include "modo/lmfactor.hpp"
#include "modo/parse.hpp"

namespace modo {

/// A parsed configuration: the coefficient field, declared shorthands and
/// the named operators, all ready for the pipeline.
struct Session {
    SpecPtr spec;
    std::size_t ell = 0;
    std::vector<std::pair<std::string, Modo>> operators;
    std::map<std::string, FieldElement> lets;

    bool has(const std::string& name) const;
    const Modo& get(const std::string& name) const;
};

Session load_session(const std::string& text);
Session load_session_file(const std::string& path);

/// User-supplied factorization, a JSON file:
///   { "unit": "1", "factors": [ { "poly": "mu - 2*i*lambda^2", "multiplicity": 1 } ] }
/// Polynomials use the canonical syntax; the product is verified before use.
LmFactorization<FieldElement> load_user_factorization(const std::string& path, const SpecPtr& spec);

} // namespace modo

#endif
