#include "painleve/numverify.hpp"

#include "painleve/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace painleve {

CompiledRational::CompiledRational(const RationalFunction& f, const std::vector<Var>& slots,
                                   const std::map<Var, ComplexRational>& params)
    : num_(lower(f.numerator(), slots, params)), den_(lower(f.denominator(), slots, params)) {}

std::vector<CompiledRational::Term> CompiledRational::lower(const Polynomial& p, const std::vector<Var>& slots,
                                                            const std::map<Var, ComplexRational>& params) {
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
        Term term{c.get_d(), {}};
        for (const auto& [v, e] : m.factors()) {
            auto slot = std::find(slots.begin(), slots.end(), v);
            if (slot != slots.end()) {
                term.powers.emplace_back(static_cast<std::size_t>(slot - slots.begin()), e);
                continue;
            }
            auto bound = params.find(v);
            if (v.kind != VarKind::Param || bound == params.end())
                throw ConstraintError("cannot evaluate numerically: " + to_string(v) + " has no value");
            if (!bound->second.is_real())
                throw ConstraintError("cannot evaluate numerically over the reals: " + to_string(v) + " = " +
                                      to_string(bound->second));
            term.coefficient *= std::pow(bound->second.re().get_d(), static_cast<int>(e));
        }
        out.push_back(std::move(term));
    }
    return out;
}

double CompiledRational::eval(const std::vector<Term>& terms, std::span<const double> x) {
    double acc = 0.0;
    for (const Term& term : terms) {
        double v = term.coefficient;
        for (const auto& [slot, e] : term.powers) {
            const double base = x[slot];
            for (unsigned k = 0; k < e; ++k) v *= base;
        }
        acc += v;
    }
    return acc;
}

std::string_view event_name(EventKind k) { return k == EventKind::BlowUp ? "BlowUp" : "PoleProximity"; }

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double C[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double A[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// fifth-order weights minus embedded fourth-order weights
constexpr double E[7] = {71.0 / 57600,      0.0,          -71.0 / 16695, 71.0 / 1920,
                         -17253.0 / 339200, 22.0 / 525,   -1.0 / 40};

class Field {
public:
    explicit Field(const SystemRHS& sys) : n_(sys.variables.size()) {
        slots_ = sys.variables;
        slots_.push_back(Var::time());
        for (const auto& f : sys.rhs) rhs_.emplace_back(f, slots_, sys.bindings);
        buffer_.resize(n_ + 1);
    }

    std::size_t size() const { return n_; }

    void operator()(double t, const std::vector<double>& y, std::vector<double>& dy) {
        load(t, y);
        for (std::size_t i = 0; i < n_; ++i) dy[i] = rhs_[i](buffer_);
    }

    // Smallest |denominator| across the field and its index, at (t, y).
    std::pair<double, std::size_t> nearest_pole(double t, const std::vector<double>& y) {
        load(t, y);
        double best = INFINITY;
        std::size_t which = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            double d = std::fabs(rhs_[i].denominator(buffer_));
            if (d < best) {
                best = d;
                which = i;
            }
        }
        return {best, which};
    }

    std::vector<double> denominators(double t, const std::vector<double>& y) {
        load(t, y);
        std::vector<double> out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = rhs_[i].denominator(buffer_);
        return out;
    }

private:
    void load(double t, const std::vector<double>& y) {
        std::copy(y.begin(), y.end(), buffer_.begin());
        buffer_[n_] = t;
    }

    std::size_t n_;
    std::vector<Var> slots_;
    std::vector<CompiledRational> rhs_;
    std::vector<double> buffer_;
};

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

std::string format_time(double t) {
    std::ostringstream os;
    os.precision(17);
    os << t;
    return os.str();
}

}  // namespace

Trajectory integrate(const IntegrationSpec& spec) {
    if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0))
        throw ConstraintError("integration tolerances must be positive");
    if (spec.t0 == spec.t1) throw ConstraintError("empty integration window");
    if (spec.initial_state.size() != spec.system.variables.size())
        throw ConstraintError("initial state has " + std::to_string(spec.initial_state.size()) +
                              " components, system has " + std::to_string(spec.system.variables.size()));
    const double lo = std::min(spec.t0, spec.t1), hi = std::max(spec.t0, spec.t1);
    for (double ts : spec.system.fixed_singular_times)
        if (ts >= lo && ts <= hi)
            throw ConstraintError("integration window [" + format_time(lo) + ", " + format_time(hi) +
                                  "] contains the fixed singularity t = " + format_time(ts));

    Field field(spec.system);
    const std::size_t n = field.size();
    Trajectory traj;
    traj.variables = spec.system.variables;

    std::vector<double> y = spec.initial_state;
    double t = spec.t0;
    {
        auto [d, which] = field.nearest_pole(t, y);
        if (d <= spec.pole_tolerance)
            throw PoleError("initial state lies on a pole of " + to_string(spec.system.variables[which]) +
                            "' = " + to_string(spec.system.rhs[which]));
    }
    traj.samples.push_back({t, y, 0.0});

    const double span = std::fabs(spec.t1 - spec.t0);
    const double dir = spec.t1 > spec.t0 ? 1.0 : -1.0;
    const double h_min = 1e-13 * span;

    std::vector<std::vector<double>> k(7, std::vector<double>(n));
    std::vector<double> stage(n), y_new(n), err(n);
    field(t, y, k[0]);

    auto scaled_norm = [&](const std::vector<double>& a, const std::vector<double>& ref,
                           const std::vector<double>& ref2) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double sc = spec.abs_tol + spec.rel_tol * std::max(std::fabs(ref[i]), std::fabs(ref2[i]));
            acc += (a[i] / sc) * (a[i] / sc);
        }
        return std::sqrt(acc / static_cast<double>(n));
    };

    // Initial step from the size of the state and its derivative.
    double h;
    {
        double d0 = scaled_norm(y, y, y), d1 = scaled_norm(k[0], y, y);
        h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
        h = std::min(h, span);
        h = std::max(h, 1e-10 * span);
    }

    std::vector<double> prev_den = field.denominators(t, y);
    auto add_event = [&](EventKind kind, double at, std::string detail) {
        traj.events.push_back({kind, at, std::move(detail)});
    };

    for (std::size_t step = 0; step < spec.max_steps; ++step) {
        if (dir * (t - spec.t1) >= 0.0) break;
        bool last = false;
        if (dir * (t + dir * h - spec.t1) >= 0.0) {
            h = std::fabs(spec.t1 - t);
            last = true;
        }
        const double hs = dir * h;

        bool finite = true;
        for (int s = 1; s < 7 && finite; ++s) {
            for (std::size_t i = 0; i < n; ++i) {
                double acc = y[i];
                for (int j = 0; j < s; ++j) acc += hs * A[s][j] * k[j][i];
                stage[i] = acc;
            }
            field(t + C[s] * hs, stage, k[s]);
            finite = all_finite(k[s]) && all_finite(stage);
        }
        double err_norm = INFINITY;
        if (finite) {
            y_new = stage;  // stage 7 evaluates at the fifth-order solution
            for (std::size_t i = 0; i < n; ++i) {
                double e = 0.0;
                for (int s = 0; s < 7; ++s) e += E[s] * k[s][i];
                err[i] = hs * e;
            }
            err_norm = scaled_norm(err, y, y_new);
        }

        if (!(err_norm <= 1.0)) {
            ++traj.rejected_steps;
            double factor = std::isfinite(err_norm) ? std::max(0.1, 0.9 * std::pow(err_norm, -0.2)) : 0.1;
            h *= factor;
            if (h < h_min) {
                add_event(EventKind::BlowUp, t, "step size collapsed below " + format_time(h_min));
                break;
            }
            continue;
        }

        double local = 0.0;
        for (double e : err) local = std::max(local, std::fabs(e));
        t = last ? spec.t1 : t + hs;
        y = y_new;
        k[0] = k[6];
        traj.samples.push_back({t, y, local});
        traj.error_estimate += local;

        double magnitude = 0.0;
        for (double v : y) magnitude = std::max(magnitude, std::fabs(v));
        if (magnitude > spec.blowup_threshold) {
            add_event(EventKind::BlowUp, t, "state magnitude " + format_time(magnitude) + " exceeds threshold");
            break;
        }
        std::vector<double> den = field.denominators(t, y);
        bool pole = false;
        for (std::size_t i = 0; i < n; ++i)
            if (std::fabs(den[i]) <= spec.pole_tolerance || (den[i] > 0) != (prev_den[i] > 0)) pole = true;
        if (pole) {
            add_event(EventKind::PoleProximity, t, "a denominator of the field reached zero");
            break;
        }
        prev_den = std::move(den);
        if (last) break;

        double factor = err_norm == 0.0 ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(err_norm, -0.2)));
        h *= factor;
        if (h < h_min) {
            add_event(EventKind::BlowUp, t, "step size collapsed below " + format_time(h_min));
            break;
        }
    }
    return traj;
}

SystemRHS curve_system(const FirstOrderCurve& curve) {
    return SystemRHS{Family::PII, {Var::state(curve.variable)}, {curve.rhs}, {}, {}};
}

std::vector<double> residual_series(const Trajectory& traj, const FirstOrderCurve& curve,
                                    const RationalFunction& target_rhs) {
    const Var y0 = Var::state(curve.variable, 0), y1 = Var::state(curve.variable, 1);
    const std::vector<Var> slots{y0, y1, Var::time()};
    CompiledRational g(curve.rhs, slots), g_y(curve.rhs.partial(y0), slots), g_t(curve.rhs.partial(Var::time()), slots);
    CompiledRational target(target_rhs, slots);

    auto index = std::find(traj.variables.begin(), traj.variables.end(), y0);
    if (index == traj.variables.end())
        throw ConstraintError("trajectory does not carry the curve variable " + to_string(y0));
    const std::size_t iy = static_cast<std::size_t>(index - traj.variables.begin());

    std::vector<double> out;
    out.reserve(traj.samples.size());
    for (const Sample& s : traj.samples) {
        double x[3] = {s.state[iy], 0.0, s.t};
        const double slope = g(x);
        x[1] = slope;
        const double second = g_y(x) * slope + g_t(x);
        out.push_back(std::fabs(second - target(x)));
    }
    return out;
}

double residual_second_order(const Trajectory& traj, const FirstOrderCurve& curve,
                             const RationalFunction& target_rhs) {
    auto r = residual_series(traj, curve, target_rhs);
    return r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
}

std::vector<double> drift_series(const Trajectory& traj, const RationalFunction& f) {
    std::vector<Var> slots = traj.variables;
    slots.push_back(Var::time());
    CompiledRational compiled(f, slots);
    std::vector<double> out;
    std::vector<double> x(slots.size());
    double f0 = 0.0, prev_den = 0.0;
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        const Sample& s = traj.samples[k];
        std::copy(s.state.begin(), s.state.end(), x.begin());
        x.back() = s.t;
        const double den = compiled.denominator(x);
        if (den == 0.0 || (k > 0 && (den > 0) != (prev_den > 0)))
            throw PoleError("first-integral candidate " + to_string(f) + " has a pole on the trajectory near t = " +
                            format_time(s.t));
        prev_den = den;
        const double value = compiled.numerator(x) / den;
        if (k == 0) f0 = value;
        out.push_back(std::fabs(value - f0));
    }
    return out;
}

double conservation_drift(const Trajectory& traj, const RationalFunction& f) {
    auto d = drift_series(traj, f);
    return d.empty() ? 0.0 : *std::max_element(d.begin(), d.end());
}

std::vector<double> log_relation_series(const Trajectory& traj, double c) {
    auto find = [&](const char* name) {
        auto it = std::find(traj.variables.begin(), traj.variables.end(), Var::state(name));
        if (it == traj.variables.end())
            throw ConstraintError(std::string("log relation needs a trajectory with variable ") + name);
        return static_cast<std::size_t>(it - traj.variables.begin());
    };
    const std::size_t ix = find("x"), iy = find("y");
    std::vector<double> out;
    double g0 = 0.0;
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        const Sample& s = traj.samples[k];
        const double x = s.state[ix], y = s.state[iy];
        if (!(x > 0.0) || !(y > 0.0) || !(y < 1.0))
            throw RegionError("log relation needs x > 0 and 0 < y < 1; at t = " + format_time(s.t) +
                              " (x, y) = (" + format_time(x) + ", " + format_time(y) + ")");
        const double g = c * std::log(y) + std::log1p(-y) - std::log(x);
        if (k == 0) g0 = g;
        out.push_back(std::fabs(g - g0));
    }
    return out;
}

double log_relation_drift(const Trajectory& traj, double c) {
    auto d = log_relation_series(traj, c);
    return d.empty() ? 0.0 : *std::max_element(d.begin(), d.end());
}

void write_csv(std::ostream& out, const Trajectory& traj, const std::vector<double>& residual,
               const std::vector<double>& drift) {
    out << "t";
    for (const Var& v : traj.variables) out << ", " << to_string(v);
    out << ", residual, drift\n";
    const auto old_precision = out.precision(17);
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        const Sample& s = traj.samples[k];
        out << s.t;
        for (double v : s.state) out << ", " << v;
        out << ", " << (k < residual.size() ? residual[k] : 0.0) << ", " << (k < drift.size() ? drift[k] : 0.0)
            << '\n';
    }
    for (const Event& e : traj.events) out << "# event " << event_name(e.kind) << " t=" << e.t << '\n';
    out.precision(old_precision);
}

}  // namespace painleve
