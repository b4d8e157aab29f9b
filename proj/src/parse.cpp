#include "modo/parse.hpp"

#include <cctype>
#include <variant>

namespace modo {

namespace {

struct Token {
    enum class Kind { Ident, Number, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    unsigned primes = 0;
    int line = 1, col = 1;
};

[[noreturn]] void syntax_error(const Token& t, const std::string& what) {
    fail(Errc::syntax_error,
         "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": " + what);
}

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }
    bool accept_punct(const std::string& p) {
        if (tok_.kind == Token::Kind::Punct && tok_.text == p) {
            advance();
            return true;
        }
        return false;
    }
    Token expect_punct(const std::string& p) {
        if (tok_.kind != Token::Kind::Punct || tok_.text != p) syntax_error(tok_, "expected '" + p + "'");
        return next();
    }
    Token expect_ident() {
        if (tok_.kind != Token::Kind::Ident) syntax_error(tok_, "expected an identifier");
        return next();
    }

  private:
    void advance() {
        skip_space();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::Kind::End;
            tok_.text = "<end>";
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok_.kind = Token::Kind::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                tok_.text += take();
            while (pos_ < text_.size() && text_[pos_] == '\'') {
                ++tok_.primes;
                take();
            }
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Kind::Number;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) tok_.text += take();
            return;
        }
        tok_.kind = Token::Kind::Punct;
        tok_.text = std::string(1, take());
    }

    void skip_space() {
        for (;;) {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) take();
            if (pos_ < text_.size() && text_[pos_] == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') take();
                continue;
            }
            break;
        }
    }

    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

ExprPtr make_expr(Expr::Kind kind, const Token& at) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->line = at.line;
    e->col = at.col;
    return e;
}

class ExprParser {
  public:
    explicit ExprParser(Lexer& lex) : lex_(lex) {}

    ExprPtr parse() { return parse_sum(); }

  private:
    ExprPtr parse_sum() {
        ExprPtr lhs = parse_product();
        for (;;) {
            Token t = lex_.peek();
            if (t.kind == Token::Kind::Punct && (t.text == "+" || t.text == "-")) {
                lex_.next();
                ExprPtr node = make_expr(t.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, t);
                node->args.push_back(std::move(lhs));
                node->args.push_back(parse_product());
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_product() {
        ExprPtr lhs = parse_unary();
        for (;;) {
            Token t = lex_.peek();
            if (t.kind == Token::Kind::Punct && (t.text == "*" || t.text == "/")) {
                lex_.next();
                ExprPtr node = make_expr(t.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, t);
                node->args.push_back(std::move(lhs));
                node->args.push_back(parse_unary());
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_unary() {
        Token t = lex_.peek();
        if (t.kind == Token::Kind::Punct && t.text == "-") {
            lex_.next();
            ExprPtr node = make_expr(Expr::Kind::Neg, t);
            node->args.push_back(parse_unary());
            return node;
        }
        if (t.kind == Token::Kind::Punct && t.text == "+") {
            lex_.next();
            return parse_unary();
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        Token t = lex_.peek();
        if (t.kind == Token::Kind::Punct && t.text == "^") {
            lex_.next();
            bool negative = lex_.accept_punct("-");
            Token e = lex_.peek();
            if (e.kind != Token::Kind::Number) syntax_error(e, "expected an integer exponent");
            lex_.next();
            ExprPtr node = make_expr(Expr::Kind::Pow, t);
            node->exponent = std::stol(e.text);
            if (negative) node->exponent = -node->exponent;
            node->args.push_back(std::move(base));
            return node;
        }
        return base;
    }

    ExprPtr parse_atom() {
        Token t = lex_.peek();
        if (t.kind == Token::Kind::Number) {
            lex_.next();
            ExprPtr node = make_expr(Expr::Kind::Number, t);
            node->number = Rational(Int(t.text));
            return node;
        }
        if (t.kind == Token::Kind::Ident) {
            lex_.next();
            if (t.text == "i" && t.primes == 0) return make_expr(Expr::Kind::Imag, t);
            if (t.text == "D" && t.primes == 0) return make_expr(Expr::Kind::D, t);
            ExprPtr node = make_expr(Expr::Kind::Symbol, t);
            node->name = t.text;
            node->primes = t.primes;
            return node;
        }
        if (t.kind == Token::Kind::Punct && t.text == "(") {
            lex_.next();
            ExprPtr inner = parse_sum();
            lex_.expect_punct(")");
            return inner;
        }
        if (t.kind == Token::Kind::Punct && t.text == "[") {
            return parse_matrix();
        }
        syntax_error(t, "expected a value");
    }

    ExprPtr parse_matrix() {
        Token open = lex_.expect_punct("[");
        ExprPtr node = make_expr(Expr::Kind::Matrix, open);
        for (;;) {
            lex_.expect_punct("[");
            std::vector<ExprPtr> row;
            for (;;) {
                row.push_back(parse_sum());
                if (!lex_.accept_punct(",")) break;
            }
            lex_.expect_punct("]");
            node->rows.push_back(std::move(row));
            if (!lex_.accept_punct(",")) break;
        }
        lex_.expect_punct("]");
        return node;
    }

    Lexer& lex_;
};

// ---------------------------------------------------------------------------
// Scalar differential operators: entries of operator matrices during
// evaluation, before conversion to coefficient-left normal form.

struct ScalarOp {
    SpecPtr spec;
    std::vector<FieldElement> c; // c[k] * D^k; empty means 0

    static ScalarOp from_field(FieldElement x) {
        ScalarOp s;
        s.spec = x.spec();
        if (!x.is_zero()) s.c.push_back(std::move(x));
        return s;
    }
    static ScalarOp d_op(const SpecPtr& spec) {
        ScalarOp s;
        s.spec = spec;
        s.c = {FieldElement::constant(spec, GaussianRational::zero()),
               FieldElement::constant(spec, GaussianRational::one())};
        return s;
    }

    bool is_zero() const { return c.empty(); }
    int order() const { return static_cast<int>(c.size()) - 1; }
    FieldElement coeff(std::size_t k) const {
        if (k < c.size()) return c[k];
        return FieldElement::constant(spec, GaussianRational::zero());
    }
    void normalize() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    ScalarOp operator+(const ScalarOp& o) const {
        ScalarOp r;
        r.spec = spec;
        std::size_t n = std::max(c.size(), o.c.size());
        for (std::size_t k = 0; k < n; ++k) r.c.push_back(coeff(k) + o.coeff(k));
        r.normalize();
        return r;
    }
    ScalarOp operator-() const {
        ScalarOp r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    ScalarOp operator-(const ScalarOp& o) const { return *this + (-o); }
    ScalarOp operator*(const ScalarOp& o) const {
        ScalarOp r;
        r.spec = spec;
        if (is_zero() || o.is_zero()) return r;
        r.c.assign(c.size() + o.c.size() - 1, FieldElement::constant(spec, GaussianRational::zero()));
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j].is_zero()) continue;
            for (std::size_t k = 0; k < o.c.size(); ++k) {
                FieldElement derived = o.c[k];
                for (std::size_t m = 0; m <= j; ++m) {
                    if (m > 0) derived = derived.derive();
                    if (derived.is_zero()) continue;
                    FieldElement bin = FieldElement::constant(
                        spec, GaussianRational(Rational(binomial(static_cast<unsigned>(j), static_cast<unsigned>(m)))));
                    r.c[j + k - m] += c[j] * derived * bin;
                }
            }
        }
        r.normalize();
        return r;
    }
};

using MatrixOp = std::vector<std::vector<ScalarOp>>;
using Value = std::variant<ScalarOp, MatrixOp>;

struct EvalContext {
    SpecPtr spec;
    const std::map<std::string, FieldElement>* lets = nullptr;
    bool allow_d = true;
};

[[noreturn]] void eval_error(const Expr& e, Errc code, const std::string& what) {
    fail(code, "line " + std::to_string(e.line) + ", column " + std::to_string(e.col) + ": " + what);
}

Value eval(const Expr& e, const EvalContext& ctx);

ScalarOp expect_scalar(const Expr& e, const EvalContext& ctx) {
    Value v = eval(e, ctx);
    if (!std::holds_alternative<ScalarOp>(v)) eval_error(e, Errc::dimension_mismatch, "expected a scalar entry");
    return std::get<ScalarOp>(std::move(v));
}

FieldElement scalar_as_field(const ScalarOp& s, const Expr& at) {
    if (s.order() > 0) eval_error(at, Errc::syntax_error, "a differential operator is not allowed here");
    return s.coeff(0);
}

Value eval_symbol(const Expr& e, const EvalContext& ctx) {
    if (ctx.lets) {
        auto it = ctx.lets->find(e.name);
        if (it != ctx.lets->end()) {
            FieldElement x = it->second;
            for (unsigned k = 0; k < e.primes; ++k) x = x.derive();
            return ScalarOp::from_field(std::move(x));
        }
    }
    if (ctx.spec->backend() == DerivationSpec::Backend::RatFunc) {
        if (e.name == ctx.spec->generator()) {
            FieldElement x = FieldElement::variable(ctx.spec, e.name);
            for (unsigned k = 0; k < e.primes; ++k) x = x.derive();
            return ScalarOp::from_field(std::move(x));
        }
    } else if (ctx.spec->try_var(e.name, e.primes)) {
        return ScalarOp::from_field(FieldElement::variable(ctx.spec, e.name, e.primes));
    }
    eval_error(e, Errc::undeclared_symbol, "unknown symbol '" + e.name + "'");
}

Value eval_binary(const Expr& e, const EvalContext& ctx) {
    Value lhs = eval(*e.args[0], ctx);
    Value rhs = eval(*e.args[1], ctx);
    auto scalar = [](Value& v) -> ScalarOp& { return std::get<ScalarOp>(v); };
    auto matrix = [](Value& v) -> MatrixOp& { return std::get<MatrixOp>(v); };
    bool lm = std::holds_alternative<MatrixOp>(lhs), rm = std::holds_alternative<MatrixOp>(rhs);

    auto check_dims = [&](const MatrixOp& a, const MatrixOp& b) {
        if (a.size() != b.size() || a[0].size() != b[0].size())
            eval_error(e, Errc::dimension_mismatch, "matrix dimensions disagree");
    };

    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: {
            bool sub = e.kind == Expr::Kind::Sub;
            if (!lm && !rm) return sub ? scalar(lhs) - scalar(rhs) : scalar(lhs) + scalar(rhs);
            if (lm && rm) {
                check_dims(matrix(lhs), matrix(rhs));
                MatrixOp r = matrix(lhs);
                for (std::size_t a = 0; a < r.size(); ++a)
                    for (std::size_t b = 0; b < r[a].size(); ++b)
                        r[a][b] = sub ? r[a][b] - matrix(rhs)[a][b] : r[a][b] + matrix(rhs)[a][b];
                return r;
            }
            eval_error(e, Errc::dimension_mismatch, "cannot add a scalar and a matrix");
        }
        case Expr::Kind::Mul: {
            if (!lm && !rm) return scalar(lhs) * scalar(rhs);
            if (lm && rm) {
                MatrixOp& a = matrix(lhs);
                MatrixOp& b = matrix(rhs);
                if (a[0].size() != b.size()) eval_error(e, Errc::dimension_mismatch, "matrix product shape mismatch");
                MatrixOp r(a.size(), std::vector<ScalarOp>(b[0].size()));
                for (std::size_t x = 0; x < a.size(); ++x)
                    for (std::size_t y = 0; y < b[0].size(); ++y) {
                        ScalarOp acc;
                        acc.spec = ctx.spec;
                        for (std::size_t k = 0; k < b.size(); ++k) acc = acc + a[x][k] * b[k][y];
                        r[x][y] = std::move(acc);
                    }
                return r;
            }
            // scalar * matrix, or matrix * scalar: entrywise composition on
            // the matching side.
            MatrixOp m = lm ? matrix(lhs) : matrix(rhs);
            ScalarOp s = lm ? scalar(rhs) : scalar(lhs);
            for (auto& row : m)
                for (auto& x : row) x = lm ? x * s : s * x;
            return m;
        }
        case Expr::Kind::Div: {
            if (rm) eval_error(e, Errc::syntax_error, "division by a matrix");
            FieldElement d = scalar_as_field(scalar(rhs), *e.args[1]);
            if (d.is_zero()) eval_error(e, Errc::division_by_zero, "division by zero");
            ScalarOp inv = ScalarOp::from_field(d.inverse());
            if (!lm) return scalar(lhs) * inv;
            MatrixOp m = matrix(lhs);
            for (auto& row : m)
                for (auto& x : row) x = x * inv;
            return m;
        }
        default: eval_error(e, Errc::syntax_error, "unexpected operator");
    }
}

Value eval(const Expr& e, const EvalContext& ctx) {
    switch (e.kind) {
        case Expr::Kind::Number:
            return ScalarOp::from_field(FieldElement::constant(ctx.spec, GaussianRational(e.number)));
        case Expr::Kind::Imag:
            return ScalarOp::from_field(FieldElement::constant(ctx.spec, GaussianRational::imaginary_unit()));
        case Expr::Kind::D:
            if (!ctx.allow_d) eval_error(e, Errc::syntax_error, "D is not allowed in this context");
            return ScalarOp::d_op(ctx.spec);
        case Expr::Kind::Symbol: return eval_symbol(e, ctx);
        case Expr::Kind::Neg: {
            Value v = eval(*e.args[0], ctx);
            if (std::holds_alternative<ScalarOp>(v)) return -std::get<ScalarOp>(v);
            MatrixOp m = std::get<MatrixOp>(std::move(v));
            for (auto& row : m)
                for (auto& x : row) x = -x;
            return m;
        }
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return eval_binary(e, ctx);
        case Expr::Kind::Pow: {
            Value v = eval(*e.args[0], ctx);
            if (std::holds_alternative<ScalarOp>(v)) {
                ScalarOp base = std::get<ScalarOp>(std::move(v));
                if (e.exponent < 0) {
                    FieldElement x = scalar_as_field(base, *e.args[0]);
                    if (x.is_zero()) eval_error(e, Errc::division_by_zero, "inverse of zero");
                    return ScalarOp::from_field(x.pow(e.exponent));
                }
                ScalarOp r = ScalarOp::from_field(FieldElement::constant(ctx.spec, GaussianRational::one()));
                for (long k = 0; k < e.exponent; ++k) r = r * base;
                return r;
            }
            MatrixOp base = std::get<MatrixOp>(std::move(v));
            if (base.size() != base[0].size() || e.exponent < 0)
                eval_error(e, Errc::dimension_mismatch, "matrix power needs a square matrix and e >= 0");
            MatrixOp r(base.size(), std::vector<ScalarOp>(base.size()));
            for (std::size_t a = 0; a < r.size(); ++a)
                for (std::size_t b = 0; b < r.size(); ++b)
                    r[a][b] = ScalarOp::from_field(FieldElement::constant(
                        ctx.spec, a == b ? GaussianRational::one() : GaussianRational::zero()));
            for (long k = 0; k < e.exponent; ++k) {
                MatrixOp next(base.size(), std::vector<ScalarOp>(base.size()));
                for (std::size_t a = 0; a < base.size(); ++a)
                    for (std::size_t b = 0; b < base.size(); ++b) {
                        ScalarOp acc;
                        acc.spec = ctx.spec;
                        for (std::size_t m = 0; m < base.size(); ++m) acc = acc + r[a][m] * base[m][b];
                        next[a][b] = std::move(acc);
                    }
                r = std::move(next);
            }
            return r;
        }
        case Expr::Kind::Matrix: {
            MatrixOp m;
            std::size_t width = 0;
            for (auto& row : e.rows) {
                std::vector<ScalarOp> r;
                for (auto& cell : row) r.push_back(expect_scalar(*cell, ctx));
                if (width == 0) width = r.size();
                if (r.size() != width) eval_error(e, Errc::dimension_mismatch, "ragged matrix literal");
                m.push_back(std::move(r));
            }
            return m;
        }
    }
    eval_error(e, Errc::syntax_error, "unhandled expression");
}

} // namespace

ExprPtr parse_expression(const std::string& text) {
    Lexer lex(text);
    ExprParser parser(lex);
    ExprPtr e = parser.parse();
    if (lex.peek().kind != Token::Kind::End) syntax_error(lex.peek(), "trailing input after expression");
    return e;
}

ConfigAst parse_config(const std::string& text) {
    Lexer lex(text);
    ConfigAst out;
    for (;;) {
        Token t = lex.peek();
        if (t.kind == Token::Kind::End) break;
        if (t.kind != Token::Kind::Ident) syntax_error(t, "expected a statement");
        if (t.text == "field") {
            lex.next();
            if (out.field.present) syntax_error(t, "duplicate field block");
            out.field.present = true;
            lex.expect_punct("{");
            while (!lex.accept_punct("}")) {
                Token k = lex.expect_ident();
                if (k.text == "backend") {
                    lex.expect_punct("=");
                    out.field.backend = lex.expect_ident().text;
                } else if (k.text == "gen") {
                    lex.expect_punct("=");
                    out.field.generator = lex.expect_ident().text;
                } else if (k.text == "d") {
                    lex.expect_punct("(");
                    Token g = lex.expect_ident();
                    lex.expect_punct(")");
                    lex.expect_punct("=");
                    if (out.field.generator.empty()) out.field.generator = g.text;
                    if (g.text != out.field.generator) syntax_error(g, "derivative of an undeclared generator");
                    ExprParser parser(lex);
                    out.field.generator_derivative = parser.parse();
                } else if (k.text == "vars") {
                    lex.expect_punct("=");
                    for (;;) {
                        out.field.vars.push_back(lex.expect_ident().text);
                        if (!lex.accept_punct(",")) break;
                    }
                } else if (k.text == "rule") {
                    Token jet = lex.expect_ident();
                    if (jet.primes == 0) syntax_error(jet, "rule left-hand side needs a derivative order");
                    lex.expect_punct("=");
                    ExprParser parser(lex);
                    out.field.rules.emplace_back(std::make_pair(jet.text, jet.primes), parser.parse());
                } else {
                    syntax_error(k, "unknown field entry '" + k.text + "'");
                }
                lex.accept_punct(";");
            }
            lex.accept_punct(";");
            continue;
        }
        if (t.text == "ell") {
            lex.next();
            lex.expect_punct("=");
            Token n = lex.peek();
            if (n.kind != Token::Kind::Number) syntax_error(n, "expected an integer");
            lex.next();
            out.ell = std::stol(n.text);
            lex.accept_punct(";");
            continue;
        }
        if (t.text == "let") {
            lex.next();
            Token name = lex.expect_ident();
            lex.expect_punct("=");
            ExprParser parser(lex);
            out.lets.emplace_back(name.text, parser.parse());
            lex.accept_punct(";");
            continue;
        }
        if (t.text == "operator") {
            lex.next();
            Token name = lex.expect_ident();
            lex.expect_punct("=");
            ExprParser parser(lex);
            out.operators.emplace_back(name.text, parser.parse());
            lex.accept_punct(";");
            continue;
        }
        syntax_error(t, "unknown statement '" + t.text + "'");
    }
    return out;
}

BivarPoly eval_bivar(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number: return BivarPoly::constant(GaussianRational(e.number));
        case Expr::Kind::Imag: return BivarPoly::constant(GaussianRational::imaginary_unit());
        case Expr::Kind::Symbol: {
            if (e.primes != 0) eval_error(e, Errc::syntax_error, "derivatives are not allowed here");
            if (e.name == "lambda") return BivarPoly::lambda(GaussianRational::one());
            if (e.name == "mu") return BivarPoly::mu(GaussianRational::one());
            eval_error(e, Errc::undeclared_symbol, "unknown symbol '" + e.name + "' in a polynomial");
        }
        case Expr::Kind::Neg: return -eval_bivar(*e.args[0]);
        case Expr::Kind::Add: return eval_bivar(*e.args[0]) + eval_bivar(*e.args[1]);
        case Expr::Kind::Sub: return eval_bivar(*e.args[0]) - eval_bivar(*e.args[1]);
        case Expr::Kind::Mul: return eval_bivar(*e.args[0]) * eval_bivar(*e.args[1]);
        case Expr::Kind::Div: {
            BivarPoly num = eval_bivar(*e.args[0]);
            BivarPoly den = eval_bivar(*e.args[1]);
            if (!den.is_constant() || den.is_zero())
                eval_error(e, Errc::syntax_error, "polynomial division must be by a nonzero constant");
            return num * den.leading_coeff().inverse();
        }
        case Expr::Kind::Pow: {
            if (e.exponent < 0) eval_error(e, Errc::syntax_error, "negative power in a polynomial");
            BivarPoly base = eval_bivar(*e.args[0]);
            return base.pow_or_one(static_cast<std::uint32_t>(e.exponent), GaussianRational::one());
        }
        default: eval_error(e, Errc::syntax_error, "not a polynomial expression");
    }
}

BivarPoly parse_bivar(const std::string& text) { return eval_bivar(*parse_expression(text)); }

FieldElement eval_field_element(const Expr& e, const SpecPtr& spec,
                                const std::map<std::string, FieldElement>& lets) {
    EvalContext ctx{spec, &lets, false};
    Value v = eval(e, ctx);
    if (!std::holds_alternative<ScalarOp>(v)) eval_error(e, Errc::dimension_mismatch, "expected a scalar");
    return scalar_as_field(std::get<ScalarOp>(v), e);
}

FieldElement parse_field_element(const std::string& text, const SpecPtr& spec) {
    return eval_field_element(*parse_expression(text), spec, {});
}

Modo eval_operator(const Expr& e, const SpecPtr& spec, const std::map<std::string, FieldElement>& lets) {
    EvalContext ctx{spec, &lets, true};
    Value v = eval(e, ctx);
    MatrixOp m;
    if (std::holds_alternative<ScalarOp>(v)) {
        m.push_back({std::get<ScalarOp>(std::move(v))});
    } else {
        m = std::get<MatrixOp>(std::move(v));
    }
    if (m.size() != m[0].size()) eval_error(e, Errc::dimension_mismatch, "operator matrix must be square");
    std::size_t ell = m.size();
    int order = 0;
    for (auto& row : m)
        for (auto& x : row) order = std::max(order, x.order());
    FieldElement zero = FieldElement::constant(spec, GaussianRational::zero());
    std::vector<Mat<FieldElement>> coeffs(static_cast<std::size_t>(order) + 1, Mat<FieldElement>::zero(ell, zero));
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = 0; j < ell; ++j)
            for (int k = 0; k <= m[i][j].order(); ++k) coeffs[static_cast<std::size_t>(k)].at(i, j) = m[i][j].coeff(k);
    return Modo(spec, ell, std::move(coeffs));
}

} // namespace modo
