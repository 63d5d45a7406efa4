#include "painleve/exactnum.hpp"

#include "painleve/errors.hpp"

#include <cctype>

namespace painleve {

ComplexRational::ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    canonicalize();
}

void ComplexRational::canonicalize() {
    re_.canonicalize();
    im_.canonicalize();
}

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
    if (o.is_zero()) throw PoleError("division by zero in Q(i)");
    Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
    Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

int lex_compare(const ComplexRational& a, const ComplexRational& b) {
    if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? -1 : 1;
    int c = cmp(a.im_, b.im_);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string to_string(const ComplexRational& z) {
    if (z.is_real()) return z.re().get_str();
    if (sgn(z.re()) == 0) return z.im().get_str() + "i";
    std::string out = z.re().get_str();
    if (sgn(z.im()) > 0) out += '+';
    return out + z.im().get_str() + "i";
}

namespace {

class CgaussScanner {
public:
    explicit CgaussScanner(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    std::size_t pos() const { return pos_; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        std::string token = at_end() ? "<end of input>" : "'" + std::string(1, text_[pos_]) + "'";
        throw ParseError("parameter \"" + std::string(text_) + "\": " + msg + " at " + token +
                             " (offset " + std::to_string(pos_) + ")",
                         pos_);
    }

    std::string digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    // [sign] digits ['/' digits]. In "a+bi" the joining operator is read as
    // the sign of b.
    Rational rational(bool allow_sign) {
        bool negative = false;
        if (allow_sign && (peek() == '+' || peek() == '-')) {
            negative = peek() == '-';
            ++pos_;
        }
        std::string num = digits();
        std::string den = "1";
        if (peek() == '/') {
            ++pos_;
            std::size_t den_pos = pos_;
            den = digits();
            if (mpz_class(den) == 0) {
                pos_ = den_pos;
                fail("zero denominator");
            }
        }
        Rational q{mpz_class(num), mpz_class(den)};
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }

    void expect_i() {
        if (peek() != 'i') fail("expected 'i'");
        ++pos_;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ComplexRational parse_cgauss(std::string_view text) {
    CgaussScanner sc(text);
    sc.skip_space();
    Rational first = sc.rational(true);
    ComplexRational result;
    if (sc.peek() == 'i') {
        sc.expect_i();
        result = ComplexRational(0, first);
    } else if (sc.peek() == '+' || sc.peek() == '-') {
        Rational second = sc.rational(true);
        sc.expect_i();
        result = ComplexRational(first, second);
    } else {
        result = ComplexRational(first);
    }
    sc.skip_space();
    if (!sc.at_end()) sc.fail("unexpected trailing input");
    return result;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool lattice_member(const ComplexRational& z, LatticeKind lattice) {
    if (!z.is_real()) return false;
    const Rational& x = z.re();
    switch (lattice) {
        case LatticeKind::Integers:
            return is_integer(x);
        case LatticeKind::TwoIntegers:
            return is_integer(x) && mpz_class(x.get_num() % 2) == 0;
        case LatticeKind::HalfPlusIntegers:
            return x.get_den() == 2;
    }
    return false;
}

}  // namespace painleve
