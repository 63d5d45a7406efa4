#pragma once

#include "painleve/models.hpp"
#include "painleve/verify.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace painleve {

/// A rational function lowered to double evaluation over a fixed slot list.
class CompiledRational {
public:
    /// Every non-parameter variable of f must appear in `slots`; parameters
    /// are looked up in `params` and must be real. Throws ConstraintError
    /// otherwise.
    CompiledRational(const RationalFunction& f, const std::vector<Var>& slots,
                     const std::map<Var, ComplexRational>& params = {});

    double numerator(std::span<const double> x) const { return eval(num_, x); }
    double denominator(std::span<const double> x) const { return eval(den_, x); }
    double operator()(std::span<const double> x) const { return numerator(x) / denominator(x); }

private:
    struct Term {
        double coefficient;
        std::vector<std::pair<std::size_t, unsigned>> powers;
    };
    static std::vector<Term> lower(const Polynomial& p, const std::vector<Var>& slots,
                                   const std::map<Var, ComplexRational>& params);
    static double eval(const std::vector<Term>& terms, std::span<const double> x);

    std::vector<Term> num_;
    std::vector<Term> den_;
};

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr double kDefaultBlowupThreshold = 1e8;

struct IntegrationSpec {
    SystemRHS system;
    double t0 = 0.0;
    double t1 = 1.0;
    std::vector<double> initial_state;
    double rel_tol = kDefaultTolerance;
    double abs_tol = kDefaultTolerance;
    double blowup_threshold = kDefaultBlowupThreshold;
    /// |denominator| below this counts as reaching a pole of the field.
    double pole_tolerance = 1e-12;
    std::size_t max_steps = 2'000'000;
};

enum class EventKind { BlowUp, PoleProximity };
std::string_view event_name(EventKind k);

struct Event {
    EventKind kind;
    double t;
    std::string detail;
};

struct Sample {
    double t;
    std::vector<double> state;
    double local_error;  // max-norm of the embedded error estimate of the step ending here
};

/// Accepted steps of an integration run. Samples are strictly monotone in the
/// integration direction (t0 -> t1, either sign); an event ends the run.
struct Trajectory {
    std::vector<Var> variables;
    std::vector<Sample> samples;
    std::vector<Event> events;
    double error_estimate = 0.0;  // sum of local error estimates
    double max_residual = 0.0;
    double max_drift = 0.0;
    std::size_t rejected_steps = 0;

    bool completed() const { return events.empty(); }
    const Sample& last() const { return samples.back(); }
};

/// Adaptive Dormand-Prince 5(4) with step rejection. A state component
/// beyond blowup_threshold, a step size below 1e-13 |t1 - t0| or a
/// non-finite stage value ends the run with a BlowUp event; a field
/// denominator reaching zero ends it with PoleProximity.
/// Throws ConstraintError for invalid tolerances, a window containing a
/// fixed singularity or unresolved parameters; PoleError when the initial
/// state sits on a pole of the field.
Trajectory integrate(const IntegrationSpec& spec);

/// The curve y' = g(y, t) as a one-dimensional system.
SystemRHS curve_system(const FirstOrderCurve& curve);

/// Per-sample |y'' - target(y, y', t)| with y' = g and y'' = g_y g + g_t
/// computed from the curve by the chain rule.
std::vector<double> residual_series(const Trajectory& traj, const FirstOrderCurve& curve,
                                    const RationalFunction& target_rhs);
double residual_second_order(const Trajectory& traj, const FirstOrderCurve& curve,
                             const RationalFunction& target_rhs);

/// Per-sample |f(state) - f(initial state)|. Throws PoleError if a
/// denominator of f vanishes or changes sign along the samples.
std::vector<double> drift_series(const Trajectory& traj, const RationalFunction& f);
double conservation_drift(const Trajectory& traj, const RationalFunction& f);

/// max |G(t) - G(t0)| with G = c log y + log(1 - y) - log x, for real c.
/// Requires x > 0 and 0 < y < 1 at every sample (RegionError otherwise).
std::vector<double> log_relation_series(const Trajectory& traj, double c);
double log_relation_drift(const Trajectory& traj, double c);

/// CSV with header "t, <vars...>, residual, drift"; empty series are written
/// as zeros. Events follow as "# event <Kind> t=<time>" lines.
void write_csv(std::ostream& out, const Trajectory& traj, const std::vector<double>& residual = {},
               const std::vector<double>& drift = {});

}  // namespace painleve
