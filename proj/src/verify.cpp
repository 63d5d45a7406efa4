#include "painleve/verify.hpp"

#include "painleve/errors.hpp"

namespace painleve {

RationalFunction partial_derivative(const RationalFunction& f, const Var& v) { return f.partial(v); }

IdentityVerdict verify_subvariety(const FirstOrderCurve& curve, const RationalFunction& second_order_rhs) {
    const Var y0 = Var::state(curve.variable, 0);
    const Var y1 = Var::state(curve.variable, 1);

    for (const Var& v : curve.rhs.variables())
        if (v.kind == VarKind::State && v != y0)
            throw ConstraintError("curve right-hand side may only involve " + to_string(y0) +
                                  ", t and parameters; found " + to_string(v));
    for (const Var& v : second_order_rhs.variables())
        if (v.kind == VarKind::State && v != y0 && v != y1)
            throw ConstraintError("second-order right-hand side may only involve " + to_string(y0) + ", " +
                                  to_string(y1) + ", t and parameters; found " + to_string(v));

    // y'' along the curve: differentiate g(y, t), then eliminate y' = g.
    const std::map<Var, RationalFunction> on_curve{{y1, curve.rhs}};
    RationalFunction lhs = curve.rhs.total_derivative().substitute(on_curve);
    RationalFunction rhs = second_order_rhs.substitute(on_curve);
    RationalFunction residual = lhs - rhs;
    return {residual.is_zero(), residual};
}

IdentityVerdict verify_first_integral(const RationalFunction& f, const std::map<Var, RationalFunction>& field) {
    RationalFunction sum;
    for (const Var& v : f.variables()) {
        if (v.kind == VarKind::Param) continue;
        auto it = field.find(v);
        if (it != field.end()) {
            sum = sum + f.partial(v) * it->second;
        } else if (v.kind == VarKind::Time) {
            sum = sum + f.partial(v);
        } else {
            throw ConstraintError("first-integral candidate depends on " + to_string(v) +
                                  ", which the vector field does not define");
        }
    }
    return {sum.is_zero(), sum};
}

IdentityVerdict verify_first_integral(std::string_view f_text, const std::map<Var, RationalFunction>& field,
                                      const std::vector<std::string>& params) {
    return verify_first_integral(parse_rational(f_text, params), field);
}

RationalFunction quotient_of_partials(const RationalFunction& f, const Var& x, const Var& y) {
    for (const Var& v : f.variables())
        if (v.kind == VarKind::State && v != x && v != y)
            throw ConstraintError("quotient of partials needs a function of " + to_string(x) + " and " +
                                  to_string(y) + " only; found " + to_string(v));
    RationalFunction fy = f.partial(y);
    if (fy.is_zero()) throw PoleError("d/d" + to_string(y) + " of " + to_string(f) + " vanishes identically");
    return -(f.partial(x) / fy);
}

}  // namespace painleve
