#pragma once

#include "painleve/rational_function.hpp"

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace painleve {

/// Names the parser may resolve. An identifier that is neither `t` nor a
/// declared parameter is a state variable; when `states` is non-empty it must
/// be one of them.
struct SymbolTable {
    std::set<std::string> params;
    std::set<std::string> states;
};

/// Immutable expression tree over {+, -, *, /, ^n} with leaves that are
/// rational constants or variables. Subtrees are shared.
class DiffExpr {
public:
    enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Neg, Pow };

    DiffExpr();  // the constant 0
    static DiffExpr constant(const Rational& c);
    static DiffExpr variable(const Var& v);

    Kind kind() const;
    const Rational& value() const;  // Constant only
    const Var& var() const;         // Variable only
    unsigned exponent() const;      // Pow only
    const DiffExpr& lhs() const;    // binary ops, Neg, Pow
    const DiffExpr& rhs() const;    // binary ops

    friend DiffExpr operator+(const DiffExpr& a, const DiffExpr& b);
    friend DiffExpr operator-(const DiffExpr& a, const DiffExpr& b);
    friend DiffExpr operator*(const DiffExpr& a, const DiffExpr& b);
    friend DiffExpr operator/(const DiffExpr& a, const DiffExpr& b);
    DiffExpr operator-() const;
    DiffExpr pow(unsigned n) const;

    std::set<Var> free_variables() const;

private:
    struct Node;
    explicit DiffExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static DiffExpr make(Kind kind, const DiffExpr& lhs, const DiffExpr& rhs, unsigned exponent = 0);
    std::shared_ptr<const Node> node_;
};

/// Grammar (explicit '*' required, exponents are integer literals):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | ident "'"* | '(' expr ')'
///
/// Throws ParseError with the character offset, or UnsupportedExponent for a
/// non-literal exponent such as y^c.
DiffExpr parse_expression(std::string_view text, const SymbolTable& symbols);
DiffExpr parse_expression(std::string_view text, const std::vector<std::string>& params = {});

/// Applies the derivation on the tree (Leibniz and quotient rules).
DiffExpr total_derivative(const DiffExpr& e);

/// Expands and normalizes. Throws PoleError when a divisor is identically 0.
RationalFunction to_rational(const DiffExpr& e);

/// True iff a - b normalizes to zero.
bool canonical_equal(const DiffExpr& a, const DiffExpr& b);

/// Fully parenthesized tree printer; accepted by parse_expression.
std::string to_string(const DiffExpr& e);

/// Parse straight to canonical form.
RationalFunction parse_rational(std::string_view text, const std::vector<std::string>& params = {});

}  // namespace painleve
