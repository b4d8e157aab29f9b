#include "modo/bc.hpp"

namespace modo {

std::vector<unsigned> minimal_exponents(const std::vector<std::pair<SpectralPoly, unsigned>>& factors, const Modo& l,
                                        const Modo& b) {
    std::vector<unsigned> r;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        unsigned ri = factors[i].second;
        for (unsigned cand = 1; cand <= factors[i].second; ++cand) {
            SpectralPoly prod = SpectralPoly::constant(l.one_scalar());
            for (std::size_t j = 0; j < factors.size(); ++j) {
                unsigned e = (j == i) ? cand : factors[j].second;
                prod *= factors[j].first.pow_or_one(e, l.one_scalar());
            }
            if (op_eval_poly(prod, l, b, true).is_zero()) {
                ri = cand;
                break;
            }
        }
        r.push_back(ri);
    }
    SpectralPoly joint = SpectralPoly::constant(l.one_scalar());
    for (std::size_t i = 0; i < factors.size(); ++i) joint *= factors[i].first.pow_or_one(r[i], l.one_scalar());
    if (!op_eval_poly(joint, l, b, true).is_zero())
        fail(Errc::joint_minimality_failure, "product of minimal factor powers does not vanish at (L,B)");
    return r;
}

std::optional<SpectralPoly> poly_in_l(const Modo& l, const Modo& b) {
    if (l.order() != 1) return std::nullopt;
    Mat<FieldElement> a1 = l.coeff(1);
    if (a1.det().is_zero()) return std::nullopt;
    Mat<FieldElement> a1_inv = mat_inv(a1);

    SpectralPoly result;
    Modo rem = b;
    while (!rem.is_zero()) {
        unsigned k = static_cast<unsigned>(rem.order());
        Mat<FieldElement> cand = rem.coeff(k) * a1_inv.pow(k);
        // cand must be c*I with c a differential constant.
        FieldElement c = cand.at(0, 0);
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = 0; j < cand.size(); ++j) {
                if (i == j && cand.at(i, j) != c) return std::nullopt;
                if (i != j && !cand.at(i, j).is_zero()) return std::nullopt;
            }
        if (!c.derive().is_zero()) return std::nullopt;
        result.add_term(LmExp{k, 0}, c);
        rem = rem - l.pow(k).scale(c);
        if (!rem.is_zero() && rem.order() >= static_cast<int>(k)) return std::nullopt;
    }
    return result;
}

BCReport bc_generator(const Modo& l, const Modo& b,
                      const std::optional<LmFactorization<FieldElement>>& user_factorization) {
    if (!commutator(l, b).is_zero()) fail(Errc::noncommuting_pair, "BC generator needs a commuting pair");
    BCReport report;
    report.curve = spectral_curve(l, b);
    const SpectralPoly& f = report.curve.curve;

    Modo f_lb = op_eval_poly(f, l, b, true);
    report.f_is_bc = f_lb.is_zero();
    if (!report.f_is_bc) {
        // No generator is computable when f(L,B) != 0; stop with the witness.
        report.f_of_pair = std::move(f_lb);
        return report;
    }

    LmFactorization<FieldElement> fac;
    if (user_factorization) {
        fac = *user_factorization;
        lm_verify_factorization(f, fac);
        report.used_user_factorization = true;
    } else {
        fac = lm_factor(f);
    }

    report.trivial_case.reset();
    if (auto r_poly = poly_in_l(l, b)) {
        SpectralPoly h = SpectralPoly::mu(l.one_scalar()) - *r_poly;
        report.trivial_case = h;
    }

    std::vector<std::pair<SpectralPoly, unsigned>> hs;
    for (auto& [h, m] : fac.factors) hs.emplace_back(h, m);
    std::vector<unsigned> rs = minimal_exponents(hs, l, b);

    SpectralPoly f_red = SpectralPoly::constant(l.one_scalar());
    SpectralPoly gen = f_red;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        report.factors.push_back(BCFactor{hs[i].first, hs[i].second, rs[i]});
        report.decomposition.emplace_back(hs[i].first, rs[i]);
        f_red *= hs[i].first;
        gen *= hs[i].first.pow_or_one(rs[i], l.one_scalar());
    }
    report.f_red = f_red;
    report.generator = gen;

    // F | f and f_red | F, as exact divisions.
    if (!f.divide_exact(gen)) fail(Errc::joint_minimality_failure, "generator does not divide f");
    if (!gen.divide_exact(f_red)) fail(Errc::joint_minimality_failure, "square-free part does not divide generator");
    return report;
}

} // namespace modo
