#include "painleve/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace painleve {

std::string to_string(const Var& v) {
    if (v.kind != VarKind::State) return v.name;
    return v.name + std::string(v.order, '\'');
}

Monomial::Monomial(const Var& v, unsigned exponent) {
    if (exponent > 0) factors_.emplace_back(v, exponent);
}

unsigned Monomial::degree(const Var& v) const {
    for (const auto& [var, e] : factors_)
        if (var == v) return e;
    return 0;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    auto& f = out.factors_;
    f.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            f.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            f.push_back(*b++);
        } else {
            f.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& o) const {
    Monomial out;
    auto b = o.factors_.begin();
    for (const auto& [var, e] : factors_) {
        if (b != o.factors_.end() && b->first < var) return std::nullopt;
        if (b != o.factors_.end() && b->first == var) {
            if (b->second > e) return std::nullopt;
            if (b->second < e) out.factors_.emplace_back(var, e - b->second);
            ++b;
        } else {
            out.factors_.emplace_back(var, e);
        }
    }
    if (b != o.factors_.end()) return std::nullopt;
    return out;
}

Monomial Monomial::without(const Var& v) const {
    Monomial out;
    for (const auto& f : factors_)
        if (f.first != v) out.factors_.push_back(f);
    return out;
}

bool LexLess::operator()(const Monomial& a, const Monomial& b) const {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto ia = fa.rbegin(), ib = fb.rbegin();
    for (; ia != fa.rend() && ib != fb.rend(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == fa.rend() && ib != fb.rend();
}

Polynomial::Polynomial(const Rational& c) {
    if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(const Var& v) { terms_.emplace(Monomial(v), Rational(1)); }

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
    if (sgn(c) != 0) terms_.emplace(m, c);
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.begin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

std::set<Var> Polynomial::variables() const {
    std::set<Var> out;
    for (const auto& [m, c] : terms_)
        for (const auto& f : m.factors()) out.insert(f.first);
    return out;
}

bool Polynomial::contains(const Var& v) const { return degree(v) > 0; }

unsigned Polynomial::degree(const Var& v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
    return d;
}

std::optional<Var> Polynomial::main_variable() const {
    std::optional<Var> best;
    for (const auto& [m, c] : terms_)
        if (!m.is_one()) {
            const Var& top = m.factors().back().first;
            if (!best || *best < top) best = top;
        }
    return best;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, Rational(ca * cb));
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const Rational& c) const {
    if (sgn(c) == 0) return {};
    Polynomial out = *this;
    for (auto& [m, coeff] : out.terms_) coeff *= c;
    return out;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result(1), base = *this;
    while (n > 0) {
        if (n & 1u) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return scaled(Rational(1 / leading_coefficient()));
}

Polynomial Polynomial::partial(const Var& v) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        unsigned e = m.degree(v);
        if (e == 0) continue;
        Monomial rest = m.without(v) * Monomial(v, e - 1);
        out.add_term(rest, Rational(c * e));
    }
    return out;
}

std::map<unsigned, Polynomial> Polynomial::coefficients_in(const Var& v) const {
    std::map<unsigned, Polynomial> out;
    for (const auto& [m, c] : terms_) out[m.degree(v)].add_term(m.without(v), c);
    return out;
}

Polynomial Polynomial::exact_divide(const Polynomial& b) const {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial q, r = *this;
    const Monomial& lb = b.leading_monomial();
    const Rational& cb = b.leading_coefficient();
    while (!r.is_zero()) {
        auto m = r.leading_monomial().divide(lb);
        if (!m) throw std::domain_error("inexact polynomial division");
        Polynomial t(*m, Rational(r.leading_coefficient() / cb));
        q += t;
        r -= t * b;
    }
    return q;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, const Var& v) {
    const unsigned db = b.degree(v);
    const unsigned da = a.degree(v);
    if (da < db) return a;
    Polynomial lb = b.coefficients_in(v).rbegin()->second;
    Polynomial r = a;
    unsigned steps = da - db + 1;
    while (!r.is_zero() && r.degree(v) >= db) {
        unsigned dr = r.degree(v);
        Polynomial lr = r.coefficients_in(v).rbegin()->second;
        r = lb * r - lr * Polynomial(Monomial(v, dr - db), Rational(1)) * b;
        --steps;
    }
    return lb.pow(steps) * r;
}

namespace {

Polynomial content_in(const Polynomial& p, const Var& v) {
    Polynomial g;
    for (const auto& [deg, coeff] : p.coefficients_in(v)) {
        g = gcd(g, coeff);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

Polynomial primitive_part(const Polynomial& p, const Var& v) {
    if (p.is_zero()) return p;
    return p.exact_divide(content_in(p, v));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);

    Var x = std::max(*a.main_variable(), *b.main_variable());
    if (!a.contains(x) || !b.contains(x)) {
        const Polynomial& with = a.contains(x) ? a : b;
        const Polynomial& without = a.contains(x) ? b : a;
        Polynomial g = without.monic();
        for (const auto& [deg, coeff] : with.coefficients_in(x)) {
            g = gcd(g, coeff);
            if (g.is_constant()) break;
        }
        return g;
    }

    Polynomial ca = content_in(a, x), cb = content_in(b, x);
    Polynomial pa = a.exact_divide(ca), pb = b.exact_divide(cb);
    if (pa.degree(x) < pb.degree(x)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Polynomial r = pseudo_remainder(pa, pb, x);
        pa = std::move(pb);
        pb = r.is_zero() ? r : primitive_part(r, x).monic();
    }
    return (gcd(ca, cb) * primitive_part(pa, x)).monic();
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out += '-';
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (const auto& [var, e] : m.factors()) {
            if (!mono.empty()) mono += '*';
            mono += to_string(var);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

}  // namespace painleve
