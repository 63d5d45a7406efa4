#include "painleve/models.hpp"

#include "painleve/errors.hpp"
#include "painleve/expression.hpp"

#include <deque>
#include <map>
#include <set>

namespace painleve {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::PII: return "p2";
        case Family::PIII: return "p3";
        case Family::PIV: return "p4";
        case Family::PV: return "p5";
        case Family::PVI: return "p6";
        case Family::XC: return "xc";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::PII, Family::PIII, Family::PIV, Family::PV, Family::PVI, Family::XC})
        if (family_name(f) == name) return f;
    throw ParseError("unknown family '" + std::string(name) + "' (expected p2 p3 p4 p5 p6 xc)");
}

std::size_t family_dimension(Family f) {
    switch (f) {
        case Family::PII: return 1;
        case Family::PIII: return 2;
        case Family::PIV: return 3;
        case Family::PV: return 4;
        case Family::PVI: return 4;
        case Family::XC: return 1;
    }
    return 0;
}

std::string to_string(const Param& p) {
    if (const auto* z = std::get_if<ComplexRational>(&p)) return to_string(*z);
    return "generic";
}

Param parse_param(std::string_view text) {
    auto first = text.find_first_not_of(" \t");
    auto last = text.find_last_not_of(" \t");
    std::string_view trimmed = first == std::string_view::npos ? text : text.substr(first, last - first + 1);
    if (trimmed == "generic") return GenericTag{};
    return parse_cgauss(trimmed);
}

bool is_generic(const Param& p) { return std::holds_alternative<GenericTag>(p); }

FamilyInstance::FamilyInstance(Family family, std::vector<Param> params)
    : family_(family), params_(std::move(params)) {
    const std::size_t dim = family_dimension(family_);
    if (params_.size() != dim)
        throw ConstraintError(std::string(family_name(family_)) + " takes " + std::to_string(dim) +
                              " parameter(s), got " + std::to_string(params_.size()));
    if (family_ == Family::PIV || family_ == Family::PV) {
        // Exact check when concrete. With generic coordinates the constraint
        // can only hold if at least two of them absorb it.
        std::size_t generic = 0;
        ComplexRational sum;
        for (const Param& p : params_) {
            if (is_generic(p))
                ++generic;
            else
                sum += std::get<ComplexRational>(p);
        }
        if (generic == 0 && !sum.is_zero())
            throw ConstraintError(std::string(family_name(family_)) +
                                  " parameters must sum to zero; sum is " + to_string(sum));
        if (generic == 1)
            throw ConstraintError(std::string(family_name(family_)) +
                                  " parameters must sum to zero; a single generic coordinate cannot");
    }
}

FamilyInstance FamilyInstance::parse(Family family, std::string_view params) {
    std::vector<Param> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = params.find(',', start);
        out.push_back(parse_param(params.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return FamilyInstance(family, std::move(out));
}

bool FamilyInstance::is_concrete() const {
    for (const Param& p : params_)
        if (is_generic(p)) return false;
    return true;
}

ParamVector FamilyInstance::concrete() const {
    ParamVector out;
    for (const Param& p : params_) {
        if (is_generic(p))
            throw ConstraintError(std::string(family_name(family_)) + ": generic parameter where a value is required");
        out.push_back(std::get<ComplexRational>(p));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string_view generator_name(Generator g) {
    switch (g) {
        case Generator::S0: return "s0";
        case Generator::S1: return "s1";
        case Generator::S2: return "s2";
        case Generator::S3: return "s3";
        case Generator::S4: return "s4";
        case Generator::TMinus: return "tminus";
    }
    return "?";
}

Generator parse_generator(std::string_view name) {
    for (Generator g : {Generator::S0, Generator::S1, Generator::S2, Generator::S3, Generator::S4, Generator::TMinus})
        if (generator_name(g) == name) return g;
    throw ParseError("unknown generator '" + std::string(name) + "'");
}

std::string to_string(const GroupWord& w) {
    std::string out;
    for (Generator g : w.letters) {
        if (!out.empty()) out += ' ';
        out += generator_name(g);
    }
    return out;
}

namespace {

const ComplexRational kThird(Rational(1, 3));

ParamVector apply_p3(Generator g, const ParamVector& v) {
    const ComplexRational& v1 = v[0];
    const ComplexRational& v2 = v[1];
    const ComplexRational one(1);
    switch (g) {
        case Generator::S1: return {v2, v1};
        case Generator::S2: return {-v2, -v1};
        case Generator::S3: return {v2 + one, v1 - one};
        case Generator::S4: return {-v2 + one, -v1 + one};
        default: break;
    }
    throw ConstraintError("generator " + std::string(generator_name(g)) + " does not act on p3");
}

ParamVector apply_p4(Generator g, const ParamVector& v) {
    const ComplexRational& v1 = v[0];
    const ComplexRational& v2 = v[1];
    const ComplexRational& v3 = v[2];
    const ComplexRational one(1);
    switch (g) {
        case Generator::S1: return {v2, v1, v3};
        case Generator::S2: return {v3, v2, v1};
        case Generator::TMinus: return {v1 - kThird, v2 - kThird, v3 + kThird + kThird};
        // t_-^{-1} s1 s2 s1 t_- in closed form.
        case Generator::S0: return {v1, v3 + one, v2 - one};
        default: break;
    }
    throw ConstraintError("generator " + std::string(generator_name(g)) + " does not act on p4");
}

std::string key_of(const ParamVector& v) {
    std::string k;
    for (const auto& z : v) k += to_string(z) + ";";
    return k;
}

}  // namespace

ParamVector apply_generator(GroupGenerator g, const ParamVector& v) {
    if (g.family != Family::PIII && g.family != Family::PIV)
        throw ConstraintError("no parameter transformations for " + std::string(family_name(g.family)));
    if (v.size() != family_dimension(g.family))
        throw ConstraintError("dimension mismatch: " + std::string(family_name(g.family)) + " expects " +
                              std::to_string(family_dimension(g.family)) + " coordinates, got " +
                              std::to_string(v.size()));
    return g.family == Family::PIII ? apply_p3(g.id, v) : apply_p4(g.id, v);
}

ParamVector apply_word(const GroupWord& w, ParamVector v) {
    for (Generator g : w.letters) v = apply_generator({w.family, g}, v);
    return v;
}

std::vector<Generator> orbit_generators(Family f) {
    if (f == Family::PIII) return {Generator::S1, Generator::S2, Generator::S3, Generator::S4};
    if (f == Family::PIV) return {Generator::S0, Generator::S1, Generator::S2};
    throw ConstraintError("no parameter transformations for " + std::string(family_name(f)));
}

namespace {

void require_p4_plane(const ParamVector& v) {
    if (v.size() != 3) throw ConstraintError("p4 expects 3 coordinates, got " + std::to_string(v.size()));
    ComplexRational sum = v[0] + v[1] + v[2];
    if (!sum.is_zero()) throw ConstraintError("p4 parameters must sum to zero; sum is " + to_string(sum));
}

// Index of the first violated wall of the fundamental region, or -1.
int violated_wall(const ParamVector& v) {
    const ComplexRational zero;
    if (lex_compare(v[1] - v[0], zero) < 0) return 0;
    if (lex_compare(v[0] - v[2], zero) < 0) return 1;
    if (lex_compare(v[2] - v[1] + ComplexRational(1), zero) < 0) return 2;
    return -1;
}

}  // namespace

bool in_fundamental_region_p4(const ParamVector& v) {
    require_p4_plane(v);
    return violated_wall(v) < 0;
}

Reduction reduce_to_fundamental_region_p4(const ParamVector& v, int max_steps) {
    require_p4_plane(v);
    if (max_steps < 1) throw ConstraintError("max_steps must be at least 1");
    static constexpr Generator kWallReflection[] = {Generator::S1, Generator::S2, Generator::S0};

    Reduction r{v, GroupWord{Family::PIV, {}}};
    for (int step = 0; step < max_steps; ++step) {
        int wall = violated_wall(r.point);
        if (wall < 0) return r;
        r.word.letters.push_back(kWallReflection[wall]);
        r.point = apply_p4(kWallReflection[wall], r.point);
    }
    if (violated_wall(r.point) < 0) return r;
    throw BudgetExceeded("fundamental-region reduction did not finish within " + std::to_string(max_steps) +
                             " steps",
                         r.word);
}

std::optional<GroupWord> orbit_search(const ParamVector& a, const ParamVector& b, Family family,
                                      int max_word_length) {
    const std::vector<Generator> gens = orbit_generators(family);
    if (a.size() != family_dimension(family) || b.size() != family_dimension(family))
        throw ConstraintError("dimension mismatch in orbit search");
    if (a == b) return GroupWord{family, {}};

    struct Node {
        ParamVector point;
        GroupWord word;
    };
    std::set<std::string> seen{key_of(a)};
    std::deque<Node> frontier{{a, GroupWord{family, {}}}};
    while (!frontier.empty()) {
        Node node = std::move(frontier.front());
        frontier.pop_front();
        if (static_cast<int>(node.word.letters.size()) >= max_word_length) continue;
        for (Generator g : gens) {
            ParamVector next = apply_generator({family, g}, node.point);
            GroupWord word = node.word;
            word.letters.push_back(g);
            if (next == b) return word;
            if (seen.insert(key_of(next)).second) frontier.push_back({std::move(next), std::move(word)});
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

std::pair<ComplexRational, ComplexRational> birational_pv(const ComplexRational& Q, const ComplexRational& P,
                                                          const ParamVector& v) {
    if (v.size() != 4) throw ConstraintError("p5 expects 4 coordinates");
    return birational_pv_shift(Q, P, v[2] - v[0]);
}

std::pair<std::complex<double>, std::complex<double>> birational_pv(std::complex<double> Q,
                                                                    std::complex<double> P,
                                                                    const ParamVector& v) {
    if (v.size() != 4) throw ConstraintError("p5 expects 4 coordinates");
    return birational_pv_shift(Q, P, (v[2] - v[0]).to_complex());
}

std::vector<std::string> param_symbols(Family f) {
    switch (f) {
        case Family::PII: return {"alpha"};
        case Family::PIII: return {"v1", "v2"};
        case Family::PIV: return {"v1", "v2", "v3"};
        case Family::PV:
        case Family::PVI: return {"v1", "v2", "v3", "v4"};
        case Family::XC: return {"c"};
    }
    return {};
}

namespace {

SystemRHS build_system(const FamilyInstance& inst, std::vector<Var> vars, const std::vector<std::string>& texts,
                       std::vector<double> singular_times) {
    const auto symbols = param_symbols(inst.family());
    SystemRHS sys{inst.family(), std::move(vars), {}, std::move(singular_times), {}};

    std::map<Var, RationalFunction> values;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const Param& p = inst.params()[i];
        if (is_generic(p)) continue;
        const auto& z = std::get<ComplexRational>(p);
        if (z.is_real())
            values.emplace(Var::param(symbols[i]), RationalFunction(z.re()));
        else
            sys.bindings.emplace(Var::param(symbols[i]), z);
    }
    for (const auto& text : texts) sys.rhs.push_back(parse_rational(text, symbols).substitute(values));
    return sys;
}

}  // namespace

SystemRHS system_rhs(const FamilyInstance& inst) {
    switch (inst.family()) {
        case Family::PII:
            return build_system(inst, {Var::state("y"), Var::state("y", 1)}, {"y'", "2*y^3 + t*y + alpha"}, {});
        case Family::PIII:
            return build_system(inst, {Var::state("q"), Var::state("p")},
                                {"(2*q^2*p - q^2 - v1*q + t)/t",
                                 "(-2*q*p^2 + 2*q*p - v1*p + (v1 + v2)/2)/t"},
                                {0.0});
        case Family::PIV:
            return build_system(inst, {Var::state("q"), Var::state("p")},
                                {"2*p*q - q^2 - 2*t*q + 2*(v1 - v2)", "2*p*q - p^2 + 2*t*p + 2*(v1 - v3)"}, {});
        case Family::PV:
            return build_system(inst, {Var::state("q"), Var::state("p")},
                                {"(2*q^2*p - 2*q*p + t*q^2 - t*q + (v1 - v2 - v3 + v4)*q + v2 - v1)/t",
                                 "(-2*q*p^2 + p^2 - 2*t*p*q + t*p - (v1 - v2 - v3 + v4)*p + (v3 - v1)*t)/t"},
                                {0.0});
        case Family::XC:
            return build_system(inst, {Var::state("x"), Var::state("y")}, {"c*y + y - c", "y*(y - 1)/x"}, {});
        case Family::PVI:
            break;
    }
    throw ConstraintError("no differential system is available for p6; only its parameter strata are modelled");
}

SystemRHS pv_original_system(const FamilyInstance& inst) {
    if (inst.family() != Family::PV) throw ConstraintError("pv_original_system needs a p5 instance");
    return build_system(inst, {Var::state("Q"), Var::state("P")},
                        {"(2*Q*(Q - 1)^2*P + (3*v1 + v2)*Q^2 - (t + 4*v1)*Q + v1 - v2)/t",
                         "((-3*Q^2 + 4*Q - 1)*P^2 - 2*(3*v1 + v2)*Q*P + (t + 4*v1)*P - (v3 - v1)*(v4 - v1))/t"},
                        {0.0});
}

RationalFunction p2_second_order_rhs(const RationalFunction& alpha) {
    const RationalFunction y(Var::state("y"));
    const RationalFunction t(Var::time());
    return RationalFunction(2) * y.pow(3) + t * y + alpha;
}

FirstOrderCurve riccati_curve(int sign) {
    if (sign != 1 && sign != -1) throw ConstraintError("Riccati sign must be +1 or -1");
    return {"y", RationalFunction(sign) * parse_rational("y^2 + t/2")};
}

RationalFunction xc_first_integral(long c, IntegralForm form) {
    const RationalFunction x(Var::state("x"));
    const RationalFunction y(Var::state("y"));
    RationalFunction f = y.pow(c) * (y - RationalFunction(1)) / x;
    return form == IntegralForm::YMinusOne ? f : -f;
}

std::map<Var, RationalFunction> xc_field(const RationalFunction& c) {
    const RationalFunction x(Var::state("x"));
    const RationalFunction y(Var::state("y"));
    return {{Var::state("x"), c * y + y - c}, {Var::state("y"), y * (y - RationalFunction(1)) / x}};
}

RationalFunction xc_slope(const RationalFunction& c) {
    const RationalFunction x(Var::state("x"));
    const RationalFunction y(Var::state("y"));
    return y * (y - RationalFunction(1)) / (x * (c * y + y - c));
}

}  // namespace painleve
