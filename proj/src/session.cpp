#include "modo/session.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace modo {

bool Session::has(const std::string& name) const {
    for (auto& [n, op] : operators)
        if (n == name) return true;
    return false;
}

const Modo& Session::get(const std::string& name) const {
    for (auto& [n, op] : operators)
        if (n == name) return op;
    fail(Errc::undeclared_symbol, "operator '" + name + "' is not defined");
}

Session load_session(const std::string& text) {
    ConfigAst ast = parse_config(text);
    if (!ast.field.present) fail(Errc::syntax_error, "configuration needs a field block");

    Session s;
    if (ast.field.backend == "ratfunc") {
        if (ast.field.generator.empty() || !ast.field.generator_derivative)
            fail(Errc::syntax_error, "ratfunc backend needs gen and d(gen)");
        SpecPtr prelim = DerivationSpec::rational_functions(ast.field.generator, MPoly());
        FieldElement d = eval_field_element(*ast.field.generator_derivative, prelim, {});
        if (!d.is_polynomial()) fail(Errc::syntax_error, "d(gen) must be a polynomial in the generator");
        s.spec = DerivationSpec::rational_functions(ast.field.generator, d.num());
    } else if (ast.field.backend == "diffpoly") {
        if (ast.field.vars.empty()) fail(Errc::syntax_error, "diffpoly backend needs vars");
        SpecPtr prelim = DerivationSpec::differential_polynomials(ast.field.vars, {});
        std::vector<RewriteRule> rules;
        for (auto& [jet, rhs_expr] : ast.field.rules) {
            FieldElement rhs = eval_field_element(*rhs_expr, prelim, {});
            if (!rhs.is_polynomial()) fail(Errc::syntax_error, "rule right-hand sides must be polynomial");
            rules.push_back(RewriteRule{jet.first, jet.second, rhs.num()});
        }
        s.spec = DerivationSpec::differential_polynomials(ast.field.vars, rules);
    } else {
        fail(Errc::syntax_error, "unknown backend '" + ast.field.backend + "'");
    }

    for (auto& [name, expr] : ast.lets) {
        if (s.lets.count(name)) fail(Errc::syntax_error, "duplicate let '" + name + "'");
        s.lets.emplace(name, eval_field_element(*expr, s.spec, s.lets));
    }

    for (auto& [name, expr] : ast.operators) {
        if (s.has(name)) fail(Errc::syntax_error, "duplicate operator '" + name + "'");
        Modo op = eval_operator(*expr, s.spec, s.lets);
        if (s.ell == 0) s.ell = op.size();
        if (op.size() != s.ell) fail(Errc::dimension_mismatch, "operators of different sizes");
        s.operators.emplace_back(name, std::move(op));
    }
    if (ast.ell != 0) {
        if (s.ell == 0) s.ell = static_cast<std::size_t>(ast.ell);
        if (s.ell != static_cast<std::size_t>(ast.ell))
            fail(Errc::dimension_mismatch, "declared ell does not match the operators");
    }
    return s;
}

Session load_session_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::syntax_error, "cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_session(buf.str());
}

LmFactorization<FieldElement> load_user_factorization(const std::string& path, const SpecPtr& spec) {
    std::ifstream in(path);
    if (!in) fail(Errc::invalid_user_factorization, "cannot open factorization file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Errc::invalid_user_factorization, std::string("bad JSON: ") + e.what());
    }
    LmFactorization<FieldElement> fac;
    fac.unit = FieldElement::constant(spec, GaussianRational::one());
    try {
        if (j.contains("unit")) {
            BivarPoly u = parse_bivar(j.at("unit").get<std::string>());
            if (!u.is_constant() || u.is_zero())
                fail(Errc::invalid_user_factorization, "unit must be a nonzero constant");
            fac.unit = FieldElement::constant(spec, u.leading_coeff());
        }
        if (!j.contains("factors") || !j.at("factors").is_array())
            fail(Errc::invalid_user_factorization, "missing factors array");
        for (auto& item : j.at("factors")) {
            BivarPoly h = parse_bivar(item.at("poly").get<std::string>());
            unsigned m = item.at("multiplicity").get<unsigned>();
            fac.factors.emplace_back(lm_embed(h, spec), m);
        }
    } catch (const ModoError&) {
        throw;
    } catch (const std::exception& e) {
        fail(Errc::invalid_user_factorization, std::string("malformed factorization file: ") + e.what());
    }
    return fac;
}

} // namespace modo
