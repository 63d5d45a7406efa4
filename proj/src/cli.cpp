#include "painleve/cli.hpp"

#include "painleve/errors.hpp"
#include "painleve/json_io.hpp"
#include "painleve/numverify.hpp"
#include "painleve/sweep.hpp"
#include "painleve/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <regex>

namespace painleve::cli {

namespace {

constexpr double kDriftThreshold = 1e-6;
constexpr int kDefaultOrbitLength = 6;

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

void emit(Io& io, const Json& j) { io.out << j.dump() << '\n'; }

int fail(Io& io, int code, const std::string& message, Json extra = Json::object()) {
    io.err << "error: " << message << '\n';
    Json j = {{"error", message}, {"exit_code", code}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    emit(io, j);
    return code;
}

// Runs `body`, mapping library exceptions onto exit codes.
template <class F>
int guarded(Io& io, F&& body) {
    try {
        return body();
    } catch (const BudgetExceeded& e) {
        return fail(io, kNumericEvent, e.what(), {{"partial_word", word_json(e.partial_word())}});
    } catch (const std::exception& e) {
        return fail(io, exit_code_for_current_exception(), e.what());
    }
}

bool is_integer_literal(const std::string& s) { return std::regex_match(s, std::regex(R"(\s*[+-]?\d+\s*)")); }

Json tolerance_defaults(double rel, double abs, double blowup) {
    return {{"rel_tol", rel}, {"abs_tol", abs}, {"blowup_threshold", blowup}};
}

Json events_json(const Trajectory& traj) {
    Json out = Json::array();
    for (const Event& e : traj.events)
        out.push_back({{"kind", std::string(event_name(e.kind))}, {"t", e.t}, {"detail", e.detail}});
    return out;
}

// ---------------------------------------------------------------------------

struct ClassifyOpts {
    std::string family;
    std::string params;
};

int run_classify(Io& io, const ClassifyOpts& o) {
    return guarded(io, [&] {
        Family f = parse_family(o.family);
        emit(io, classification_json(classify(FamilyInstance::parse(f, o.params))));
        return int(kSuccess);
    });
}

struct SweepOpts {
    std::string in_path;
    bool serial = false;
};

int run_sweep(Io& io, const SweepOpts& o) {
    std::vector<std::string> lines;
    auto slurp = [&](std::istream& s) {
        for (std::string line; std::getline(s, line);) lines.push_back(line);
    };
    if (o.in_path == "-") {
        slurp(io.in);
    } else {
        std::ifstream file(o.in_path);
        if (!file) return fail(io, kParseError, "cannot open " + o.in_path);
        slurp(file);
    }
    for (const Json& j : o.serial ? sweep_serial(lines) : sweep_parallel(lines)) emit(io, j);
    return kSuccess;
}

struct RiccatiOpts {
    std::string sign = "plus";
    std::string alpha = "-1/2";
};

int run_verify_riccati(Io& io, const RiccatiOpts& o) {
    return guarded(io, [&] {
        if (o.sign != "plus" && o.sign != "minus") throw ParseError("--sign must be plus or minus");
        const int sign = o.sign == "plus" ? 1 : -1;
        const ComplexRational alpha = parse_cgauss(o.alpha);
        if (!alpha.is_real()) throw ConstraintError("--alpha must be real for the Riccati check");
        const FirstOrderCurve curve = riccati_curve(sign);
        const RationalFunction target = p2_second_order_rhs(RationalFunction(alpha.re()));
        const IdentityVerdict verdict = verify_subvariety(curve, target);

        // With a symbolic alpha the residual is linear in alpha; its root is
        // the fiber that does contain the curve.
        const Var a = Var::param("alpha");
        const IdentityVerdict symbolic = verify_subvariety(curve, p2_second_order_rhs(RationalFunction(a)));
        const Rational containing =
            -symbolic.residual.substitute({{a, RationalFunction(0)}}).numerator().constant_value() /
            symbolic.residual.partial(a).numerator().constant_value();

        io.err << "curve y' = " << to_string(curve.rhs) << " against P_II(" << to_string(alpha) << "): "
               << (verdict.holds ? "Contained" : "NotContained, residual " + to_string(verdict.residual))
               << "; the curve lies in P_II(" << containing.get_str() << ")\n";
        emit(io, {{"check", "riccati"},
                  {"verdict", verdict.holds ? "Contained" : "NotContained"},
                  {"residual", to_string(verdict.residual)},
                  {"curve", "y' = " + to_string(curve.rhs)},
                  {"target", "y'' = " + to_string(target)},
                  {"alpha", to_string(alpha)},
                  {"fiber_containing_curve", containing.get_str()},
                  {"defaults", {{"sign", "plus"}, {"alpha", "-1/2"}}}});
        return verdict.holds ? int(kSuccess) : int(kNegativeVerdict);
    });
}

struct IntegerCOpts {
    std::string c;
    std::string form = "y-minus-1";
};

// y^c with non-integer c has no rational form; point at the numeric check.
int reject_non_integer_c(Io& io, const std::string& c, const char* check) {
    return fail(io, kParseError,
                std::string(check) + ": c = " + c +
                    " is not an integer, so y^c (y-1)/x is not a rational function; use `verify log-relation "
                    "--c <float>` for the numeric check of c log y + log(1-y) - log x");
}

int run_verify_integral(Io& io, const IntegerCOpts& o) {
    if (!is_integer_literal(o.c)) return reject_non_integer_c(io, o.c, "verify integral");
    return guarded(io, [&] {
        const long c = std::stol(o.c);
        if (o.form != "y-minus-1" && o.form != "1-minus-y") throw ParseError("--form must be y-minus-1 or 1-minus-y");
        const IntegralForm form = o.form == "y-minus-1" ? IntegralForm::YMinusOne : IntegralForm::OneMinusY;
        const RationalFunction f = xc_first_integral(c, form);
        const auto field = xc_field(RationalFunction(c));
        const IdentityVerdict verdict = verify_first_integral(f, field);
        io.err << "F = " << to_string(f) << " along x' = " << to_string(field.at(Var::state("x")))
               << ", y' = " << to_string(field.at(Var::state("y"))) << ": "
               << (verdict.holds ? "Conserved" : "NotConserved, dF/dt = " + to_string(verdict.residual)) << '\n';
        emit(io, {{"check", "integral"},
                  {"verdict", verdict.holds ? "Conserved" : "NotConserved"},
                  {"residual", to_string(verdict.residual)},
                  {"c", c},
                  {"integral", to_string(f)},
                  {"form", o.form},
                  {"field", {{"x", to_string(field.at(Var::state("x")))}, {"y", to_string(field.at(Var::state("y")))}}},
                  {"defaults", {{"form", "y-minus-1"}}}});
        return verdict.holds ? int(kSuccess) : int(kNegativeVerdict);
    });
}

int run_verify_qop(Io& io, const IntegerCOpts& o) {
    if (!is_integer_literal(o.c)) return reject_non_integer_c(io, o.c, "verify qop");
    return guarded(io, [&] {
        const long c = std::stol(o.c);
        const RationalFunction f = xc_first_integral(c);
        const RationalFunction quotient = quotient_of_partials(f);
        const RationalFunction slope = xc_slope(RationalFunction(c));
        const RationalFunction diff = quotient - slope;
        io.err << "-F_x/F_y = " << to_string(quotient) << "; dy/dx = " << to_string(slope) << ": "
               << (diff.is_zero() ? "identity holds" : "identity fails") << '\n';
        emit(io, {{"check", "qop"},
                  {"verdict", diff.is_zero() ? "Holds" : "Fails"},
                  {"residual", to_string(diff)},
                  {"c", c},
                  {"quotient", to_string(quotient)},
                  {"slope", to_string(slope)},
                  {"defaults", Json::object()}});
        return diff.is_zero() ? int(kSuccess) : int(kNegativeVerdict);
    });
}

struct LogRelationOpts {
    double c = 0.0;
    double x0 = 1.0, y0 = 0.5, t0 = 0.0, t1 = 0.3;
    double tol = kDefaultTolerance;
    double threshold = kDriftThreshold;
};

int run_verify_log_relation(Io& io, const LogRelationOpts& o) {
    return guarded(io, [&] {
        if (!std::isfinite(o.c)) throw ParseError("--c must be a finite number");
        FamilyInstance inst(Family::XC, {ComplexRational(Rational(o.c))});
        IntegrationSpec spec{system_rhs(inst), o.t0, o.t1, {o.x0, o.y0}, o.tol, o.tol};
        const Trajectory traj = integrate(spec);
        const Json defaults = {{"x0", 1.0}, {"y0", 0.5}, {"t0", 0.0}, {"t1", 0.3},
                               {"tol", kDefaultTolerance}, {"threshold", kDriftThreshold},
                               {"blowup_threshold", kDefaultBlowupThreshold}};
        if (!traj.completed()) {
            return fail(io, kNumericEvent, "integration stopped early", {{"events", events_json(traj)}});
        }
        const double drift = log_relation_drift(traj, o.c);
        const bool ok = drift < o.threshold;
        io.err << "c log y + log(1-y) - log x along X_c, c = " << o.c << ": drift " << drift
               << (ok ? " (conserved)" : " (not conserved)") << '\n';
        emit(io, {{"check", "log-relation"},
                  {"verdict", ok ? "Conserved" : "NotConserved"},
                  {"residual", drift},
                  {"c", o.c},
                  {"samples", traj.samples.size()},
                  {"defaults", defaults}});
        return ok ? int(kSuccess) : int(kNegativeVerdict);
    });
}

struct SimulateOpts {
    std::string family;
    std::string params;
    std::vector<double> init;
    double t0 = 0.0, t1 = 1.0;
    double tol = kDefaultTolerance;
    double blowup = kDefaultBlowupThreshold;
    std::string out;
};

int run_simulate(Io& io, const SimulateOpts& o) {
    return guarded(io, [&] {
        FamilyInstance inst = FamilyInstance::parse(parse_family(o.family), o.params);
        IntegrationSpec spec{system_rhs(inst), o.t0, o.t1, o.init, o.tol, o.tol, o.blowup};
        Trajectory traj = integrate(spec);

        std::vector<double> residual;
        for (const Sample& s : traj.samples) residual.push_back(s.local_error);
        std::vector<double> drift;
        std::string drift_of = "none";
        if (inst.family() == Family::XC && inst.is_concrete()) {
            const ComplexRational c = inst.concrete()[0];
            if (c.is_real() && is_integer(c.re())) {
                const RationalFunction f = xc_first_integral(c.re().get_num().get_si());
                try {
                    drift = drift_series(traj, f);
                    drift_of = to_string(f);
                } catch (const PoleError&) {
                    drift.clear();
                }
            }
        }
        for (double r : residual) traj.max_residual = std::max(traj.max_residual, r);
        for (double d : drift) traj.max_drift = std::max(traj.max_drift, d);

        if (!o.out.empty() && o.out != "-") {
            std::ofstream file(o.out);
            if (!file) throw ConstraintError("cannot write " + o.out);
            write_csv(file, traj, residual, drift);
        } else if (o.out == "-") {
            write_csv(io.out, traj, residual, drift);
        }

        Json summary = {{"command", "simulate"},
                        {"family", std::string(family_name(inst.family()))},
                        {"params", params_json(inst.params())},
                        {"t0", o.t0},
                        {"t1", o.t1},
                        {"samples", traj.samples.size()},
                        {"t_end", traj.last().t},
                        {"final_state", traj.last().state},
                        {"events", events_json(traj)},
                        {"error_estimate", traj.error_estimate},
                        {"max_drift", traj.max_drift},
                        {"drift_of", drift_of},
                        {"defaults", tolerance_defaults(kDefaultTolerance, kDefaultTolerance, kDefaultBlowupThreshold)}};
        if (o.out == "-")
            io.err << summary.dump() << '\n';
        else
            emit(io, summary);
        return traj.completed() ? int(kSuccess) : int(kNumericEvent);
    });
}

struct ReduceOpts {
    std::string params;
    int max_steps = kDefaultReductionSteps;
};

int run_reduce(Io& io, const ReduceOpts& o) {
    return guarded(io, [&] {
        const ParamVector v = FamilyInstance::parse(Family::PIV, o.params).concrete();
        const Reduction r = reduce_to_fundamental_region_p4(v, o.max_steps);
        emit(io, {{"command", "reduce-p4"},
                  {"input", params_json(v)},
                  {"point", params_json(r.point)},
                  {"word", word_json(r.word)},
                  {"in_region", in_fundamental_region_p4(r.point)},
                  {"defaults", {{"max_steps", kDefaultReductionSteps}}}});
        return int(kSuccess);
    });
}

struct OrbitOpts {
    std::string family;
    std::string from, to;
    int max_len = kDefaultOrbitLength;
};

int run_orbit(Io& io, const OrbitOpts& o) {
    return guarded(io, [&] {
        const Family f = parse_family(o.family);
        if (f != Family::PIII && f != Family::PIV) throw ConstraintError("orbit search is defined for p3 and p4");
        const ParamVector a = FamilyInstance::parse(f, o.from).concrete();
        const ParamVector b = FamilyInstance::parse(f, o.to).concrete();
        const auto word = orbit_search(a, b, f, o.max_len);
        Json j = {{"command", "orbit"},
                  {"family", std::string(family_name(f))},
                  {"from", params_json(a)},
                  {"to", params_json(b)},
                  {"result", word ? "related" : "unknown"},
                  {"defaults", {{"max_len", kDefaultOrbitLength}}}};
        if (word) j["word"] = word_json(*word);
        emit(io, j);
        return word ? int(kSuccess) : int(kNegativeVerdict);
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Io io{in, out, err};
    CLI::App app{"Painleve parameter strata and differential-algebraic checks", "painleve"};
    app.require_subcommand(1);

    ClassifyOpts classify_opts;
    auto* classify_cmd = app.add_subcommand("classify", "classify one fiber of a family");
    classify_cmd->add_option("--family", classify_opts.family, "p2 p3 p4 p5 p6 xc")->required();
    classify_cmd->add_option("--params", classify_opts.params, "comma-separated parameters in Q(i), or generic")
        ->required()
        ->allow_extra_args(false);

    SweepOpts sweep_opts;
    auto* sweep_cmd = app.add_subcommand("sweep", "classify '<family> <params>' lines, one JSON object per line");
    sweep_cmd->add_option("--in", sweep_opts.in_path, "input file, - for standard input")->required();
    sweep_cmd->add_flag("--serial", sweep_opts.serial, "use the single-threaded reference kernel");

    auto* verify_cmd = app.add_subcommand("verify", "symbolic and numeric identity checks");
    verify_cmd->require_subcommand(1);
    RiccatiOpts riccati_opts;
    auto* riccati_cmd = verify_cmd->add_subcommand("riccati", "Riccati curve inside a P_II fiber");
    riccati_cmd->add_option("--sign", riccati_opts.sign, "plus: y' = y^2 + t/2, minus: y' = -y^2 - t/2")
        ->capture_default_str();
    riccati_cmd->add_option("--alpha", riccati_opts.alpha, "P_II parameter")->capture_default_str();
    IntegerCOpts integral_opts;
    auto* integral_cmd = verify_cmd->add_subcommand("integral", "rational first integral of X_c");
    integral_cmd->add_option("--c", integral_opts.c, "integer constant")->required();
    integral_cmd->add_option("--form", integral_opts.form, "y-minus-1 or 1-minus-y")->capture_default_str();
    IntegerCOpts qop_opts;
    auto* qop_cmd = verify_cmd->add_subcommand("qop", "dy/dx of X_c as -F_x/F_y");
    qop_cmd->add_option("--c", qop_opts.c, "integer constant")->required();
    LogRelationOpts log_opts;
    auto* log_cmd = verify_cmd->add_subcommand("log-relation", "numeric constancy of c log y + log(1-y) - log x");
    log_cmd->add_option("--c", log_opts.c, "real constant")->required();
    log_cmd->add_option("--x0", log_opts.x0)->capture_default_str();
    log_cmd->add_option("--y0", log_opts.y0)->capture_default_str();
    log_cmd->add_option("--t0", log_opts.t0)->capture_default_str();
    log_cmd->add_option("--t1", log_opts.t1)->capture_default_str();
    log_cmd->add_option("--tol", log_opts.tol)->capture_default_str();
    log_cmd->add_option("--threshold", log_opts.threshold)->capture_default_str();

    SimulateOpts sim_opts;
    auto* sim_cmd = app.add_subcommand("simulate", "integrate a family's system");
    sim_cmd->add_option("--family", sim_opts.family)->required();
    sim_cmd->add_option("--params", sim_opts.params)->required();
    sim_cmd->add_option("--init", sim_opts.init, "initial state, comma-separated")->required()->delimiter(',');
    sim_cmd->add_option("--t0", sim_opts.t0)->capture_default_str();
    sim_cmd->add_option("--t1", sim_opts.t1)->capture_default_str();
    sim_cmd->add_option("--tol", sim_opts.tol)->capture_default_str();
    sim_cmd->add_option("--blowup", sim_opts.blowup)->capture_default_str();
    sim_cmd->add_option("--out", sim_opts.out, "CSV path, - for standard output");

    ReduceOpts reduce_opts;
    auto* reduce_cmd = app.add_subcommand("reduce-p4", "map a P_IV parameter into the fundamental region");
    reduce_cmd->add_option("--params", reduce_opts.params)->required();
    reduce_cmd->add_option("--max-steps", reduce_opts.max_steps)->capture_default_str();

    OrbitOpts orbit_opts;
    auto* orbit_cmd = app.add_subcommand("orbit", "search for a group word relating two parameters");
    orbit_cmd->add_option("--family", orbit_opts.family, "p3 or p4")->required();
    orbit_cmd->add_option("--from", orbit_opts.from)->required();
    orbit_cmd->add_option("--to", orbit_opts.to)->required();
    orbit_cmd->add_option("--max-len", orbit_opts.max_len)->capture_default_str();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        return fail(io, kParseError, e.what());
    }

    if (classify_cmd->parsed()) return run_classify(io, classify_opts);
    if (sweep_cmd->parsed()) return run_sweep(io, sweep_opts);
    if (riccati_cmd->parsed()) return run_verify_riccati(io, riccati_opts);
    if (integral_cmd->parsed()) return run_verify_integral(io, integral_opts);
    if (qop_cmd->parsed()) return run_verify_qop(io, qop_opts);
    if (log_cmd->parsed()) return run_verify_log_relation(io, log_opts);
    if (sim_cmd->parsed()) return run_simulate(io, sim_opts);
    if (reduce_cmd->parsed()) return run_reduce(io, reduce_opts);
    if (orbit_cmd->parsed()) return run_orbit(io, orbit_opts);
    return fail(io, kParseError, "no subcommand");
}

}  // namespace painleve::cli
