#pragma once

#include "painleve/errors.hpp"
#include "painleve/exactnum.hpp"
#include "painleve/rational_function.hpp"
#include "painleve/verify.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace painleve {

enum class Family { PII, PIII, PIV, PV, PVI, XC };

/// CLI vocabulary: p2 p3 p4 p5 p6 xc.
std::string_view family_name(Family f);
Family parse_family(std::string_view name);
/// Parameter count: 1, 2, 3, 4, 4, 1.
std::size_t family_dimension(Family f);

/// A coordinate that is an independent transcendental constant. It never
/// satisfies an integrality condition.
struct GenericTag {
    friend bool operator==(GenericTag, GenericTag) { return true; }
};

using Param = std::variant<ComplexRational, GenericTag>;
using ParamVector = std::vector<ComplexRational>;

/// "generic" or the canonical Q(i) string.
std::string to_string(const Param& p);
/// Accepts "generic" or the Q(i) parameter grammar.
Param parse_param(std::string_view text);
bool is_generic(const Param& p);

/// Family tag plus parameter vector, validated on construction.
class FamilyInstance {
public:
    /// Throws ConstraintError on a wrong dimension or a violated hyperplane
    /// constraint (P_IV: v1+v2+v3 = 0, P_V: v1+...+v4 = 0).
    FamilyInstance(Family family, std::vector<Param> params);
    /// Comma-separated parameter list; ParseError on bad text.
    static FamilyInstance parse(Family family, std::string_view params);

    Family family() const noexcept { return family_; }
    const std::vector<Param>& params() const noexcept { return params_; }
    bool is_concrete() const;
    /// The exact vector; throws ConstraintError if a coordinate is generic.
    ParamVector concrete() const;

private:
    Family family_;
    std::vector<Param> params_;
};

// ---------------------------------------------------------------------------
// parameter transformation groups

enum class Generator { S0, S1, S2, S3, S4, TMinus };

std::string_view generator_name(Generator g);
Generator parse_generator(std::string_view name);

struct GroupGenerator {
    Family family;
    Generator id;
};

/// Generators of one family, applied left to right.
struct GroupWord {
    Family family = Family::PIII;
    std::vector<Generator> letters;

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

std::string to_string(const GroupWord& w);

/// P_III: s1..s4. P_IV: s0, s1, s2, tminus. Throws ConstraintError for a
/// generator outside the family or a dimension mismatch.
ParamVector apply_generator(GroupGenerator g, const ParamVector& v);
ParamVector apply_word(const GroupWord& w, ParamVector v);

/// Generators spanning the reflection group used for orbit questions:
/// s1..s4 for P_III, s0 s1 s2 for P_IV.
std::vector<Generator> orbit_generators(Family f);

/// Membership in the P_IV fundamental region: (Re, Im) of v2-v1, v1-v3 and
/// v3-v2+1 are all lexicographically >= (0, 0).
/// Throws ConstraintError when the coordinates do not sum to zero.
bool in_fundamental_region_p4(const ParamVector& v);

struct Reduction {
    ParamVector point;
    GroupWord word;
};

/// Step budget exhausted during reduction. Carries the word applied so far.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, GroupWord partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const GroupWord& partial_word() const noexcept { return partial_; }

private:
    GroupWord partial_;
};

inline constexpr int kDefaultReductionSteps = 200;

/// Greedy wall crossing into the fundamental region: while a wall condition
/// fails, reflect in that wall (s1 for v2-v1, s2 for v1-v3, s0 for the affine
/// wall v3-v2+1). apply_word(result.word, v) == result.point.
Reduction reduce_to_fundamental_region_p4(const ParamVector& v, int max_steps = kDefaultReductionSteps);

/// Breadth-first search for a word of length <= max_word_length mapping a to
/// b. nullopt means no witness within the bound, not that none exists.
std::optional<GroupWord> orbit_search(const ParamVector& a, const ParamVector& b, Family family,
                                      int max_word_length);

// ---------------------------------------------------------------------------
// P_V change of coordinates q = Q/(Q-1), p = -(Q-1)^2 P + (v3-v1)(Q-1)

template <class T>
std::pair<T, T> birational_pv_shift(const T& Q, const T& P, const T& v3_minus_v1) {
    const T one(1);
    if (Q == one) throw PoleError("birational map has a pole at Q = 1");
    T qm1 = Q - one;
    return {Q / qm1, -(qm1 * qm1) * P + v3_minus_v1 * qm1};
}

/// v is the P_V parameter vector (v1..v4); only v3 - v1 enters.
std::pair<ComplexRational, ComplexRational> birational_pv(const ComplexRational& Q, const ComplexRational& P,
                                                          const ParamVector& v);
std::pair<std::complex<double>, std::complex<double>> birational_pv(std::complex<double> Q,
                                                                    std::complex<double> P,
                                                                    const ParamVector& v);

// ---------------------------------------------------------------------------
// right-hand sides

/// First-order system x_i' = rhs_i. Concrete real parameters are substituted;
/// generic or non-real parameters stay symbolic (named alpha, v1..v4, c) and
/// non-real values are recorded in `bindings`.
struct SystemRHS {
    Family family;
    std::vector<Var> variables;
    std::vector<RationalFunction> rhs;
    /// Times where the system is singular for every solution (t = 0 for the
    /// P_III and P_V systems).
    std::vector<double> fixed_singular_times;
    std::map<Var, ComplexRational> bindings;
};

/// P_II as the pair (y, y') with y'' = 2y^3 + t y + alpha; P_III, P_IV, P_V
/// as their (q, p) systems with the 1/t factor on the right; X_c as
/// x' = c y + y - c, y' = y(y-1)/x. P_VI has no system here
/// (ConstraintError).
SystemRHS system_rhs(const FamilyInstance& inst);

/// The original (Q, P) P_V system, before the birational change.
SystemRHS pv_original_system(const FamilyInstance& inst);

/// Parameter symbol names used in symbolic right-hand sides.
std::vector<std::string> param_symbols(Family f);

/// y'' = 2y^3 + t y + alpha as a function of y, y', t.
RationalFunction p2_second_order_rhs(const RationalFunction& alpha);

/// y' = sign * (y^2 + t/2), sign = +1 or -1.
FirstOrderCurve riccati_curve(int sign);

/// Which printed form of the X_c first integral: y^c (y-1)/x or y^c (1-y)/x.
enum class IntegralForm { YMinusOne, OneMinusY };

/// y^c (y-1)/x (or its negative) for an integer c.
RationalFunction xc_first_integral(long c, IntegralForm form = IntegralForm::YMinusOne);
/// The planar field of X_c: {x: c y + y - c, y: y(y-1)/x}.
std::map<Var, RationalFunction> xc_field(const RationalFunction& c);
/// dy/dx = y(y-1) / (x (c y + y - c)).
RationalFunction xc_slope(const RationalFunction& c);

}  // namespace painleve
