#pragma once

#include "painleve/exactnum.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace painleve {

/// Kinds of indeterminate. Parameters are constants for the derivation,
/// Time is t with dt = 1, State variables carry a derivative order.
enum class VarKind { Param = 0, Time = 1, State = 2 };

/// An indeterminate of the polynomial ring. For State variables `order` is
/// the derivative order (y'' has order 2); it is 0 for the other kinds.
struct Var {
    VarKind kind = VarKind::State;
    std::string name;
    unsigned order = 0;

    static Var param(std::string n) { return {VarKind::Param, std::move(n), 0}; }
    static Var time() { return {VarKind::Time, "t", 0}; }
    static Var state(std::string n, unsigned ord = 0) { return {VarKind::State, std::move(n), ord}; }

    Var derivative() const { return {kind, name, order + 1}; }

    friend auto operator<=>(const Var&, const Var&) = default;
    friend bool operator==(const Var&, const Var&) = default;
};

/// Printed form: parameters and t by name, state variables with one prime
/// per derivative order.
std::string to_string(const Var& v);

/// Power product; entries sorted by Var ascending, exponents positive.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const Var& v, unsigned exponent = 1);

    const std::vector<std::pair<Var, unsigned>>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    unsigned degree(const Var& v) const;
    unsigned total_degree() const;

    Monomial operator*(const Monomial& o) const;
    /// Quotient when `o` divides *this.
    std::optional<Monomial> divide(const Monomial& o) const;
    /// *this with the factor v removed.
    Monomial without(const Var& v) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<Var, unsigned>> factors_;
};

/// Pure lexicographic order: the largest variable is compared first.
struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q. Terms are ordered by LexLess, so the
/// leading term is the last entry.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, LexLess>;

    Polynomial() = default;
    Polynomial(const Rational& c);
    Polynomial(long c) : Polynomial(Rational(c)) {}
    explicit Polynomial(const Var& v);
    Polynomial(const Monomial& m, const Rational& c);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// Constant coefficient value; requires is_constant().
    Rational constant_value() const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    std::set<Var> variables() const;
    bool contains(const Var& v) const;
    unsigned degree(const Var& v) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned n) const;

    /// Divided by its leading coefficient; zero stays zero.
    Polynomial monic() const;

    /// Formal partial derivative.
    Polynomial partial(const Var& v) const;

    /// Coefficients of *this viewed as a univariate polynomial in v; the
    /// returned coefficients do not contain v.
    std::map<unsigned, Polynomial> coefficients_in(const Var& v) const;

    /// Largest variable present, if any.
    std::optional<Var> main_variable() const;

    /// Exact division; throws std::domain_error when b does not divide *this.
    Polynomial exact_divide(const Polynomial& b) const;

    void add_term(const Monomial& m, const Rational& c);

private:
    Terms terms_;
};

/// Monic greatest common divisor over Q (recursive primitive PRS).
/// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder of a by b with respect to v.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, const Var& v);

/// Prints in the expression grammar with explicit '*' and '^'.
std::string to_string(const Polynomial& p);

}  // namespace painleve
