#ifndef MODO_PARSE_HPP
#define MODO_PARSE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "modo/modo_op.hpp"

namespace modo {

/// Expression AST shared by the config format, polynomial strings and
/// field-element strings.
struct Expr {
    enum class Kind { Number, Imag, Symbol, D, Matrix, Add, Sub, Mul, Div, Pow, Neg };
    Kind kind = Kind::Number;
    Rational number;
    std::string name;
    unsigned primes = 0;
    long exponent = 0;
    std::vector<std::unique_ptr<Expr>> args;
    std::vector<std::vector<std::unique_ptr<Expr>>> rows;
    int line = 0, col = 0;
};

using ExprPtr = std::unique_ptr<Expr>;

/// Parse a standalone expression (used by tests and polynomial strings).
ExprPtr parse_expression(const std::string& text);

struct FieldBlock {
    std::string backend;
    std::string generator;
    ExprPtr generator_derivative;
    std::vector<std::string> vars;
    std::vector<std::pair<std::pair<std::string, unsigned>, ExprPtr>> rules;
    bool present = false;
};

struct ConfigAst {
    FieldBlock field;
    long ell = 0; // 0 = not given
    std::vector<std::pair<std::string, ExprPtr>> lets;
    std::vector<std::pair<std::string, ExprPtr>> operators;
};

/// Parse the session configuration format:
///   field { backend=diffpoly; vars=u,v; rule u'' = -2*u^2*v; ... }
///   let u = 1/t;
///   operator L = i*[[D, u],[v, -D]];
ConfigAst parse_config(const std::string& text);

/// Evaluate an expression with lambda/mu/i as the only symbols.
BivarPoly eval_bivar(const Expr& e);
BivarPoly parse_bivar(const std::string& text);

/// Evaluate a D-free expression over the given coefficient field.
FieldElement eval_field_element(const Expr& e, const SpecPtr& spec,
                                const std::map<std::string, FieldElement>& lets);
FieldElement parse_field_element(const std::string& text, const SpecPtr& spec);

/// Evaluate an operator expression (matrix of scalar differential
/// operators) and convert it to coefficient-left normal form.
Modo eval_operator(const Expr& e, const SpecPtr& spec, const std::map<std::string, FieldElement>& lets);

} // namespace modo

#endif
