#pragma once

#include "painleve/polynomial.hpp"

#include <map>
#include <string>

namespace painleve {

/// Quotient of polynomials over Q in parameters, t and state variables.
///
/// Canonical form: numerator and denominator are coprime and the
/// denominator's lex-leading coefficient is 1; zero is 0/1. Two values are
/// equal exactly when their canonical forms are identical, so operator== is
/// semantic equality.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    explicit RationalFunction(const Var& v) : num_(v), den_(1) {}
    /// Throws PoleError when `den` is the zero polynomial.
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    std::set<Var> variables() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    /// Throws PoleError when b is zero.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    /// Integer power; negative exponents invert (PoleError on zero base).
    RationalFunction pow(long n) const;

    RationalFunction partial(const Var& v) const;

    /// Simultaneous substitution of variables by rational functions. Throws
    /// PoleError naming the denominator factor that vanishes.
    RationalFunction substitute(const std::map<Var, RationalFunction>& values) const;

    /// Derivation with dt = 1, d(y^(k)) = y^(k+1), parameters constant.
    RationalFunction total_derivative() const;

    /// Highest derivative order of any state variable named `name`, or -1.
    int max_order(const std::string& name) const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

/// "num" or "(num)/(den)" in the expression grammar.
std::string to_string(const RationalFunction& f);

/// Derivation on polynomials (same rules as RationalFunction::total_derivative).
Polynomial total_derivative(const Polynomial& p);

}  // namespace painleve
