#pragma once

#include "painleve/expression.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace painleve {

/// The order-one relation name' = rhs(name, t, params).
struct FirstOrderCurve {
    std::string variable;
    RationalFunction rhs;
};

/// Outcome of a differentiate-and-substitute identity check. `residual` is
/// the canonical difference; it is zero exactly when `holds`.
struct IdentityVerdict {
    bool holds = false;
    RationalFunction residual;
};

/// Formal partial derivative of a canonical rational function.
RationalFunction partial_derivative(const RationalFunction& f, const Var& v);

/// Checks that every solution of `curve` solves name'' = second_order_rhs.
/// The curve's relation is differentiated once, y' is eliminated by the curve
/// everywhere, and the result is compared with the target.
/// Throws ConstraintError if the target involves other state variables or
/// derivatives above order one, PoleError if elimination hits a zero
/// denominator.
IdentityVerdict verify_subvariety(const FirstOrderCurve& curve, const RationalFunction& second_order_rhs);

/// Checks that f is constant along the vector field v' = field[v]: the sum of
/// df/dv * field[v], plus df/dt when f depends on t, must vanish.
IdentityVerdict verify_first_integral(const RationalFunction& f, const std::map<Var, RationalFunction>& field);

/// Text entry point; a symbolic exponent such as y^c surfaces as
/// UnsupportedExponent before any algebra is attempted.
IdentityVerdict verify_first_integral(std::string_view f_text, const std::map<Var, RationalFunction>& field,
                                      const std::vector<std::string>& params = {});

/// -(df/dx)/(df/dy), i.e. the slope dy/dx of the level curves of f.
/// Throws ConstraintError when f has state variables other than x and y and
/// PoleError when df/dy vanishes identically.
RationalFunction quotient_of_partials(const RationalFunction& f, const Var& x = Var::state("x"),
                                      const Var& y = Var::state("y"));

}  // namespace painleve
