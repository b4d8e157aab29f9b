#include "modo/lmpoly.hpp"

namespace modo {

bool mpoly_less(const MPoly& a, const MPoly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    MonomialOrder mo;
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (!(ia->first == ib->first)) return mo(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ib != b.terms().end();
}

std::optional<BivarPoly> lm_to_rational(const SpectralPoly& p) {
    BivarPoly r;
    for (auto& [e, c] : p.terms()) {
        auto q = c.as_rational();
        if (!q) return std::nullopt;
        r.add_term(e, *q);
    }
    return r;
}

SpectralPoly lm_embed(const BivarPoly& p, const SpecPtr& spec) {
    SpectralPoly r;
    for (auto& [e, c] : p.terms()) r.add_term(e, FieldElement::constant(spec, c));
    return r;
}

} // namespace modo
