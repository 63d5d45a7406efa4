#include "painleve/rational_function.hpp"

#include "painleve/errors.hpp"

namespace painleve {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PoleError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.exact_divide(g);
            den_ = den_.exact_divide(g);
        }
    }
    Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

std::set<Var> RationalFunction::variables() const {
    std::set<Var> out = num_.variables();
    out.merge(den_.variables());
    return out;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw PoleError("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(long n) const {
    if (n < 0) {
        if (is_zero()) throw PoleError("negative power of zero");
        return RationalFunction(den_.pow(static_cast<unsigned>(-n)), num_.pow(static_cast<unsigned>(-n)));
    }
    return RationalFunction(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

RationalFunction RationalFunction::partial(const Var& v) const {
    Polynomial n = num_.partial(v) * den_ - num_ * den_.partial(v);
    return RationalFunction(std::move(n), den_ * den_);
}

namespace {

// p(values) as numerator / denominator, clearing each substituted variable's
// denominator to its maximal power in p.
std::pair<Polynomial, Polynomial> substitute_poly(const Polynomial& p,
                                                  const std::map<Var, RationalFunction>& values) {
    std::map<Var, unsigned> max_deg;
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.factors())
            if (values.count(v)) max_deg[v] = std::max(max_deg[v], e);

    Polynomial common(1);
    for (const auto& [v, e] : max_deg) common *= values.at(v).denominator().pow(e);

    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term(c);
        Monomial kept;
        for (const auto& [v, e] : m.factors()) {
            auto it = values.find(v);
            if (it == values.end()) {
                kept = kept * Monomial(v, e);
                continue;
            }
            term *= it->second.numerator().pow(e);
        }
        // Every substituted variable contributes its denominator to the
        // power (max degree - degree in this term), including degree 0.
        for (const auto& [v, top] : max_deg) term *= values.at(v).denominator().pow(top - m.degree(v));
        out += term * Polynomial(kept, Rational(1));
    }
    return {out, common};
}

}  // namespace

RationalFunction RationalFunction::substitute(const std::map<Var, RationalFunction>& values) const {
    auto [nn, nd] = substitute_poly(num_, values);
    auto [dn, dd] = substitute_poly(den_, values);
    if (dn.is_zero()) {
        std::string what = "denominator factor " + to_string(den_) + " vanishes under substitution {";
        bool first = true;
        for (const auto& [v, f] : values) {
            if (!den_.contains(v)) continue;
            what += (first ? "" : ", ") + to_string(v) + " = " + to_string(f);
            first = false;
        }
        throw PoleError(what + "}");
    }
    return RationalFunction(nn * dd, nd * dn);
}

Polynomial total_derivative(const Polynomial& p) {
    Polynomial out;
    for (const Var& v : p.variables()) {
        switch (v.kind) {
            case VarKind::Param:
                break;
            case VarKind::Time:
                out += p.partial(v);
                break;
            case VarKind::State:
                out += p.partial(v) * Polynomial(v.derivative());
                break;
        }
    }
    return out;
}

RationalFunction RationalFunction::total_derivative() const {
    Polynomial n = painleve::total_derivative(num_) * den_ - num_ * painleve::total_derivative(den_);
    return RationalFunction(std::move(n), den_ * den_);
}

int RationalFunction::max_order(const std::string& name) const {
    int best = -1;
    for (const Var& v : variables())
        if (v.kind == VarKind::State && v.name == name) best = std::max(best, static_cast<int>(v.order));
    return best;
}

std::string to_string(const RationalFunction& f) {
    if (f.denominator() == Polynomial(1)) return to_string(f.numerator());
    return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

}  // namespace painleve
