#include "painleve/expression.hpp"

#include "painleve/errors.hpp"

#include <cctype>

namespace painleve {

struct DiffExpr::Node {
    Kind kind = Kind::Constant;
    Rational value{0};
    Var var;
    unsigned exponent = 0;
    DiffExpr lhs_expr{std::shared_ptr<const Node>{}};
    DiffExpr rhs_expr{std::shared_ptr<const Node>{}};
};

DiffExpr::DiffExpr() : DiffExpr(constant(0)) {}

DiffExpr DiffExpr::constant(const Rational& c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->value = c;
    return DiffExpr(std::move(n));
}

DiffExpr DiffExpr::variable(const Var& v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Variable;
    n->var = v;
    return DiffExpr(std::move(n));
}

DiffExpr DiffExpr::make(Kind kind, const DiffExpr& lhs, const DiffExpr& rhs, unsigned exponent) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->exponent = exponent;
    n->lhs_expr = lhs;
    n->rhs_expr = rhs;
    return DiffExpr(std::move(n));
}

DiffExpr::Kind DiffExpr::kind() const { return node_->kind; }
const Rational& DiffExpr::value() const { return node_->value; }
const Var& DiffExpr::var() const { return node_->var; }
unsigned DiffExpr::exponent() const { return node_->exponent; }
const DiffExpr& DiffExpr::lhs() const { return node_->lhs_expr; }
const DiffExpr& DiffExpr::rhs() const { return node_->rhs_expr; }

DiffExpr operator+(const DiffExpr& a, const DiffExpr& b) { return DiffExpr::make(DiffExpr::Kind::Add, a, b); }
DiffExpr operator-(const DiffExpr& a, const DiffExpr& b) { return DiffExpr::make(DiffExpr::Kind::Sub, a, b); }
DiffExpr operator*(const DiffExpr& a, const DiffExpr& b) { return DiffExpr::make(DiffExpr::Kind::Mul, a, b); }
DiffExpr operator/(const DiffExpr& a, const DiffExpr& b) { return DiffExpr::make(DiffExpr::Kind::Div, a, b); }
DiffExpr DiffExpr::operator-() const { return make(Kind::Neg, *this, DiffExpr()); }
DiffExpr DiffExpr::pow(unsigned n) const { return make(Kind::Pow, *this, DiffExpr(), n); }

std::set<Var> DiffExpr::free_variables() const {
    std::set<Var> out;
    switch (kind()) {
        case Kind::Constant:
            break;
        case Kind::Variable:
            out.insert(var());
            break;
        case Kind::Neg:
        case Kind::Pow:
            out = lhs().free_variables();
            break;
        default:
            out = lhs().free_variables();
            out.merge(rhs().free_variables());
    }
    return out;
}

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
public:
    Parser(std::string_view text, const SymbolTable& symbols) : text_(text), symbols_(symbols) {}

    DiffExpr parse() {
        DiffExpr e = expr();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("expression \"" + std::string(text_) + "\": " + msg + " at offset " +
                             std::to_string(pos_),
                         pos_);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    DiffExpr expr() {
        DiffExpr e = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            DiffExpr r = term();
            e = c == '+' ? e + r : e - r;
        }
        return e;
    }

    DiffExpr term() {
        DiffExpr e = unary();
        for (char c = peek(); c == '*' || c == '/'; c = peek()) {
            ++pos_;
            DiffExpr r = unary();
            e = c == '*' ? e * r : e / r;
        }
        return e;
    }

    DiffExpr unary() {
        char c = peek();
        if (c == '-' || c == '+') {
            ++pos_;
            DiffExpr inner = unary();
            return c == '-' ? -inner : inner;
        }
        return power();
    }

    DiffExpr power() {
        DiffExpr base = primary();
        if (peek() != '^') return base;
        ++pos_;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string digits = number();
            if (digits.size() > 6) {
                pos_ = start;
                fail("exponent too large");
            }
            return base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        if (c == '-') fail("negative exponent; write the reciprocal with '/'");
        if (ident_start(c) || c == '(') {
            std::size_t start = pos_;
            std::string shown = ident_start(c) ? identifier() : "(...)";
            throw UnsupportedExponent("expression \"" + std::string(text_) + "\": exponent '" + shown +
                                      "' at offset " + std::to_string(start) +
                                      " is not an integer literal; symbolic exponents are not supported "
                                      "(use a concrete integer, or the numeric log-relation check)");
        }
        fail("expected integer exponent");
    }

    std::string number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void reject_juxtaposition() {
        std::size_t save = pos_;
        char c = peek();
        if (c == '(' || ident_start(c) || std::isdigit(static_cast<unsigned char>(c)))
            fail("implicit multiplication is not supported; insert '*'");
        pos_ = save;
    }

    DiffExpr primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            DiffExpr e = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            reject_juxtaposition();
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            DiffExpr e = DiffExpr::constant(Rational(mpz_class(number())));
            reject_juxtaposition();
            return e;
        }
        if (ident_start(c)) {
            std::size_t start = pos_;
            std::string name = identifier();
            unsigned primes = 0;
            while (pos_ < text_.size() && text_[pos_] == '\'') {
                ++primes;
                ++pos_;
            }
            DiffExpr e = resolve(name, primes, start);
            reject_juxtaposition();
            return e;
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    DiffExpr resolve(const std::string& name, unsigned primes, std::size_t at) {
        auto fail_at = [&](const std::string& msg) {
            pos_ = at;
            fail(msg);
        };
        if (symbols_.params.count(name)) {
            if (primes) fail_at("parameter '" + name + "' is constant and cannot carry primes");
            return DiffExpr::variable(Var::param(name));
        }
        if (name == "t") {
            if (primes) fail_at("write derivatives of t explicitly (t' = 1)");
            return DiffExpr::variable(Var::time());
        }
        if (!symbols_.states.empty() && !symbols_.states.count(name)) fail_at("unknown symbol '" + name + "'");
        return DiffExpr::variable(Var::state(name, primes));
    }

    std::string_view text_;
    const SymbolTable& symbols_;
    std::size_t pos_ = 0;
};

}  // namespace

DiffExpr parse_expression(std::string_view text, const SymbolTable& symbols) {
    return Parser(text, symbols).parse();
}

DiffExpr parse_expression(std::string_view text, const std::vector<std::string>& params) {
    SymbolTable table;
    table.params.insert(params.begin(), params.end());
    return parse_expression(text, table);
}

RationalFunction parse_rational(std::string_view text, const std::vector<std::string>& params) {
    return to_rational(parse_expression(text, params));
}

// ---------------------------------------------------------------------------

DiffExpr total_derivative(const DiffExpr& e) {
    using K = DiffExpr::Kind;
    switch (e.kind()) {
        case K::Constant:
            return DiffExpr::constant(0);
        case K::Variable: {
            const Var& v = e.var();
            if (v.kind == VarKind::Param) return DiffExpr::constant(0);
            if (v.kind == VarKind::Time) return DiffExpr::constant(1);
            return DiffExpr::variable(v.derivative());
        }
        case K::Add:
            return total_derivative(e.lhs()) + total_derivative(e.rhs());
        case K::Sub:
            return total_derivative(e.lhs()) - total_derivative(e.rhs());
        case K::Neg:
            return -total_derivative(e.lhs());
        case K::Mul:
            return total_derivative(e.lhs()) * e.rhs() + e.lhs() * total_derivative(e.rhs());
        case K::Div:
            return (total_derivative(e.lhs()) * e.rhs() - e.lhs() * total_derivative(e.rhs())) /
                   e.rhs().pow(2);
        case K::Pow: {
            unsigned n = e.exponent();
            if (n == 0) return DiffExpr::constant(0);
            return DiffExpr::constant(n) * e.lhs().pow(n - 1) * total_derivative(e.lhs());
        }
    }
    return DiffExpr::constant(0);
}

RationalFunction to_rational(const DiffExpr& e) {
    using K = DiffExpr::Kind;
    switch (e.kind()) {
        case K::Constant:
            return RationalFunction(e.value());
        case K::Variable:
            return RationalFunction(e.var());
        case K::Add:
            return to_rational(e.lhs()) + to_rational(e.rhs());
        case K::Sub:
            return to_rational(e.lhs()) - to_rational(e.rhs());
        case K::Neg:
            return -to_rational(e.lhs());
        case K::Mul:
            return to_rational(e.lhs()) * to_rational(e.rhs());
        case K::Div: {
            RationalFunction d = to_rational(e.rhs());
            if (d.is_zero())
                throw PoleError("division by the identically-zero expression " + to_string(e.rhs()));
            return to_rational(e.lhs()) / d;
        }
        case K::Pow:
            return to_rational(e.lhs()).pow(e.exponent());
    }
    return {};
}

bool canonical_equal(const DiffExpr& a, const DiffExpr& b) { return (to_rational(a) - to_rational(b)).is_zero(); }

std::string to_string(const DiffExpr& e) {
    using K = DiffExpr::Kind;
    switch (e.kind()) {
        case K::Constant:
            return sgn(e.value()) < 0 || e.value().get_den() != 1 ? "(" + e.value().get_str() + ")"
                                                                   : e.value().get_str();
        case K::Variable:
            return to_string(e.var());
        case K::Add:
            return "(" + to_string(e.lhs()) + " + " + to_string(e.rhs()) + ")";
        case K::Sub:
            return "(" + to_string(e.lhs()) + " - " + to_string(e.rhs()) + ")";
        case K::Mul:
            return "(" + to_string(e.lhs()) + "*" + to_string(e.rhs()) + ")";
        case K::Div:
            return "(" + to_string(e.lhs()) + "/" + to_string(e.rhs()) + ")";
        case K::Neg:
            return "(-" + to_string(e.lhs()) + ")";
        case K::Pow:
            return "(" + to_string(e.lhs()) + "^" + std::to_string(e.exponent()) + ")";
    }
    return "0";
}

}  // namespace painleve
