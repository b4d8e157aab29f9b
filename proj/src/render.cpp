#include "modo/render.hpp"

#include <sstream>

namespace modo {

namespace {

std::string render_int(const Int& n) { return n.str(); }

// A coefficient split for joining terms with " + " / " - ": the sign, the
// magnitude text, and whether the magnitude is exactly 1 (so it can be
// dropped in front of a monomial).
struct CoeffText {
    bool negative = false;
    std::string text;
    bool is_unit_one = false;
};

CoeffText coeff_text(const GaussianRational& z) {
    CoeffText out;
    GaussianRational w = z;
    if (!w.sign_normal() && !w.is_zero()) {
        out.negative = true;
        w = -w;
    }
    if (w.im == 0) {
        out.text = render(w.re);
        out.is_unit_one = (w.re == 1);
    } else if (w.re == 0) {
        out.text = (w.im == 1) ? "i" : render(w.im) + "*i";
    } else {
        out.text = "(" + render(w) + ")";
    }
    return out;
}

std::string join_terms(const std::vector<CoeffText>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k == 0) {
            if (parts[k].negative) out += "-";
        } else {
            out += parts[k].negative ? " - " : " + ";
        }
        out += parts[k].text;
    }
    return out;
}

std::string power_name(const std::string& base, std::uint32_t e) {
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

std::string monomial_text(const Monomial& m, const SpecPtr& spec) {
    std::string out;
    for (auto& [v, e] : m.factors) {
        if (!out.empty()) out += "*";
        out += power_name(spec->var_name(v), e);
    }
    return out;
}

CoeffText term_text(const GaussianRational& c, const std::string& monomial) {
    CoeffText ct = coeff_text(c);
    if (monomial.empty()) return ct;
    if (ct.is_unit_one) {
        ct.text = monomial;
        ct.is_unit_one = false;
    } else {
        ct.text += "*" + monomial;
    }
    return ct;
}

std::string lm_monomial_text(const LmExp& e) {
    std::string out;
    if (e.dl > 0) out += power_name("lambda", e.dl);
    if (e.dm > 0) {
        if (!out.empty()) out += "*";
        out += power_name("mu", e.dm);
    }
    return out;
}

// True when x renders as a single product (safe to inline before "*mono").
bool is_simple_field_element(const FieldElement& x) {
    return x.is_polynomial() && x.num().term_count() == 1;
}

std::vector<CoeffText> mpoly_terms(const MPoly& p, const SpecPtr& spec) {
    std::vector<CoeffText> parts;
    for (auto& [m, c] : p.terms()) parts.push_back(term_text(c, monomial_text(m, spec)));
    return parts;
}

} // namespace

std::string render(const Rational& r) {
    if (denominator(r) == 1) return render_int(numerator(r));
    return render_int(numerator(r)) + "/" + render_int(denominator(r));
}

std::string render(const GaussianRational& z) {
    if (z.is_zero()) return "0";
    if (z.im == 0) return render(z.re);
    std::string imag = (z.im == 1)    ? "i"
                       : (z.im == -1) ? "-i"
                                      : render(z.im) + "*i";
    if (z.re == 0) return imag;
    std::string out = render(z.re);
    if (z.im > 0) {
        out += "+" + ((z.im == 1) ? std::string("i") : render(z.im) + "*i");
    } else {
        out += "-" + ((z.im == -1) ? std::string("i") : render(-z.im) + "*i");
    }
    return out;
}

std::string render(const MPoly& p, const SpecPtr& spec) { return join_terms(mpoly_terms(p, spec)); }

std::string render(const FieldElement& x) {
    if (x.is_zero()) return "0";
    std::string num = render(x.num(), x.spec());
    if (x.den().is_constant()) return num;
    if (x.num().term_count() > 1) num = "(" + num + ")";
    const MPoly& d = x.den();
    std::string den = render(d, x.spec());
    bool bare = d.term_count() == 1 && d.leading_coeff().is_one() && d.leading().first.factors.size() == 1;
    if (!bare) den = "(" + den + ")";
    return num + "/" + den;
}

std::string render(const BivarPoly& p) {
    std::vector<CoeffText> parts;
    for (auto& [e, c] : p.terms()) parts.push_back(term_text(c, lm_monomial_text(e)));
    return join_terms(parts);
}

std::string render(const SpectralPoly& p) {
    std::vector<CoeffText> parts;
    for (auto& [e, c] : p.terms()) {
        std::string mono = lm_monomial_text(e);
        if (mono.empty()) {
            // Flatten the constant coefficient into the sum.
            if (auto q = c.as_rational()) {
                parts.push_back(coeff_text(*q));
            } else if (c.is_polynomial()) {
                for (auto& part : mpoly_terms(c.num(), c.spec())) parts.push_back(part);
            } else {
                CoeffText ct;
                ct.text = "(" + render(c) + ")";
                parts.push_back(ct);
            }
            continue;
        }
        if (auto q = c.as_rational()) {
            parts.push_back(term_text(*q, mono));
        } else if (is_simple_field_element(c)) {
            auto& [m, coeff] = c.num().leading();
            std::string inner = monomial_text(m, c.spec());
            std::string full = inner.empty() ? mono : inner + "*" + mono;
            parts.push_back(term_text(coeff, full));
        } else {
            CoeffText ct;
            ct.text = "(" + render(c) + ")*" + mono;
            parts.push_back(ct);
        }
    }
    return join_terms(parts);
}

std::string render(const Mat<FieldElement>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) out += ", ";
            out += render(m.at(i, j));
        }
        out += "]";
    }
    return out + "]";
}

std::string render(const Modo& op) {
    if (op.is_zero()) return "0";
    std::string out = "[";
    for (std::size_t i = 0; i < op.size(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < op.size(); ++j) {
            if (j) out += ", ";
            // Scalar operator entry, highest D power first.
            std::vector<CoeffText> parts;
            for (std::size_t k = op.coeffs().size(); k-- > 0;) {
                const FieldElement& c = op.coeffs()[k].at(i, j);
                if (c.is_zero()) continue;
                std::string dpow = k == 0 ? "" : power_name("D", static_cast<std::uint32_t>(k));
                if (auto q = c.as_rational()) {
                    parts.push_back(term_text(*q, dpow));
                } else if (is_simple_field_element(c)) {
                    auto& [m, coeff] = c.num().leading();
                    std::string inner = monomial_text(m, c.spec());
                    std::string full = dpow.empty() ? inner : (inner.empty() ? dpow : inner + "*" + dpow);
                    parts.push_back(term_text(coeff, full));
                } else {
                    CoeffText ct;
                    ct.text = "(" + render(c) + ")" + (dpow.empty() ? "" : "*" + dpow);
                    parts.push_back(ct);
                }
            }
            out += join_terms(parts);
        }
        out += "]";
    }
    return out + "]";
}

std::string render(const SpectralFraction& f) {
    if (f.is_zero()) return "0";
    return "(" + render(f.num) + ")/(" + render(f.den) + ")";
}

std::string render(const LmFactorization<FieldElement>& fac) {
    std::ostringstream out;
    out << render(SpectralPoly::constant(fac.unit));
    for (auto& [h, m] : fac.factors) {
        out << " * (" << render(h) << ")";
        if (m > 1) out << "^" << m;
    }
    return out.str();
}

std::string render(const Factorization& fac) {
    std::ostringstream out;
    out << render(fac.unit);
    for (auto& [h, m] : fac.factors) {
        out << " * (" << render(h) << ")";
        if (m > 1) out << "^" << m;
    }
    return out.str();
}

std::string render_quotient(const SpectralPoly& h, unsigned r) {
    if (r == 1) return "C[lambda,mu]/(" + render(h) + ")";
    return "C[lambda,mu]/((" + render(h) + ")^" + std::to_string(r) + ")";
}

} // namespace modo
