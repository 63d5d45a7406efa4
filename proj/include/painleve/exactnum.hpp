#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace painleve {

using Rational = mpq_class;

/// Element of Q(i). Both parts are kept canonical (lowest terms, positive
/// denominator) after every operation.
class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(Rational re, Rational im = 0);
    ComplexRational(long re) : ComplexRational(Rational(re)) {}

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_real() const { return sgn(im_) == 0; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

    ComplexRational operator-() const { return {-re_, -im_}; }
    ComplexRational& operator+=(const ComplexRational& o);
    ComplexRational& operator-=(const ComplexRational& o);
    ComplexRational& operator*=(const ComplexRational& o);
    ComplexRational& operator/=(const ComplexRational& o);

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }

    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Lexicographic (Re, Im) comparison; the order used by every
    /// "Re >= 0, Im tie-break" condition.
    friend int lex_compare(const ComplexRational& a, const ComplexRational& b);

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

private:
    void canonicalize();

    Rational re_{0};
    Rational im_{0};
};

/// Canonical printer: "3/2", "-2i", "3/2+1/3i", "0". Output is accepted by
/// parse_cgauss and reproduces the same value.
std::string to_string(const ComplexRational& z);

/// Parses `rational ('+'|'-') rational 'i' | rational | rational 'i'` with
/// rational = [sign] digits ['/' digits]. Surrounding whitespace is ignored.
/// Throws ParseError naming the offending token.
ComplexRational parse_cgauss(std::string_view text);

enum class LatticeKind { Integers, TwoIntegers, HalfPlusIntegers };

/// True iff z is real and its real part lies in Z, 2Z or 1/2 + Z.
bool lattice_member(const ComplexRational& z, LatticeKind lattice);

bool is_integer(const Rational& q);

}  // namespace painleve
