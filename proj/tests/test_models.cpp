#include "painleve/errors.hpp"
#include "painleve/models.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace painleve;

namespace {

ParamVector V(std::initializer_list<const char*> xs) {
    ParamVector out;
    for (const char* x : xs) out.push_back(parse_cgauss(x));
    return out;
}

ParamVector apply(Family f, Generator g, const ParamVector& v) { return apply_generator({f, g}, v); }

// Hand-written t_- and its inverse, for checking the closed form of s0.
ParamVector tminus_by_hand(const ParamVector& v, int sign) {
    const Rational third(1, 3);
    return {v[0] - ComplexRational(sign * third), v[1] - ComplexRational(sign * third),
            v[2] + ComplexRational(sign * 2 * third)};
}

}  // namespace

TEST_CASE("family vocabulary") {
    for (Family f : {Family::PII, Family::PIII, Family::PIV, Family::PV, Family::PVI, Family::XC})
        CHECK(parse_family(family_name(f)) == f);
    CHECK(family_dimension(Family::PVI) == 4);
    CHECK(family_dimension(Family::XC) == 1);
    CHECK_THROWS_AS(parse_family("p7"), ParseError);
}

TEST_CASE("instance validation") {
    CHECK_NOTHROW(FamilyInstance::parse(Family::PIV, "1/3,-1/3,0"));
    CHECK_THROWS_AS(FamilyInstance::parse(Family::PIV, "1,1,1"), ConstraintError);
    CHECK_THROWS_AS(FamilyInstance::parse(Family::PIII, "1"), ConstraintError);
    CHECK_THROWS_AS(FamilyInstance::parse(Family::PV, "generic,0,0,0"), ConstraintError);
    CHECK_NOTHROW(FamilyInstance::parse(Family::PV, "generic,generic,0,0"));
    CHECK_THROWS_AS(FamilyInstance::parse(Family::PII, "x"), ParseError);
    CHECK_THROWS_AS(FamilyInstance::parse(Family::PIII, "1,"), ParseError);

    const auto inst = FamilyInstance::parse(Family::PIII, " 1/2 , generic ");
    CHECK_FALSE(inst.is_concrete());
    CHECK(to_string(inst.params()[0]) == "1/2");
    CHECK(is_generic(inst.params()[1]));
    CHECK_THROWS_AS(inst.concrete(), ConstraintError);
}

TEST_CASE("P_III generators") {
    CHECK(apply(Family::PIII, Generator::S1, V({"1", "2"})) == V({"2", "1"}));
    CHECK(apply(Family::PIII, Generator::S2, V({"1", "2"})) == V({"-2", "-1"}));
    CHECK(apply(Family::PIII, Generator::S3, V({"1", "1"})) == V({"2", "0"}));
    CHECK(apply(Family::PIII, Generator::S4, V({"1", "1"})) == V({"0", "0"}));
    CHECK_THROWS_AS(apply(Family::PIII, Generator::S0, V({"1", "1"})), ConstraintError);
    CHECK_THROWS_AS(apply(Family::PIII, Generator::S1, V({"1", "1", "1"})), ConstraintError);
}

TEST_CASE("P_IV generators") {
    CHECK(apply(Family::PIV, Generator::TMinus, V({"0", "0", "0"})) == V({"-1/3", "-1/3", "2/3"}));
    CHECK(apply(Family::PIV, Generator::S1, V({"1", "2", "-3"})) == V({"2", "1", "-3"}));
    CHECK(apply(Family::PIV, Generator::S2, V({"1", "2", "-3"})) == V({"-3", "2", "1"}));
    CHECK_THROWS_AS(apply(Family::PIV, Generator::S3, V({"0", "0", "0"})), ConstraintError);
    CHECK_THROWS_AS(apply(Family::PV, Generator::S1, V({"0", "0", "0", "0"})), ConstraintError);
}

TEST_CASE("property: generators are involutions and s0 is the conjugated reflection") {
    testing::Gen gen(11);
    for (int i = 0; i < 300; ++i) {
        const ParamVector p3{gen.gaussian(), gen.gaussian()};
        for (Generator g : orbit_generators(Family::PIII))
            CHECK(apply(Family::PIII, g, apply(Family::PIII, g, p3)) == p3);

        const ParamVector p4 = gen.sum_zero(3, true);
        for (Generator g : orbit_generators(Family::PIV)) {
            CHECK(apply(Family::PIV, g, apply(Family::PIV, g, p4)) == p4);
            const ParamVector img = apply(Family::PIV, g, p4);
            CHECK((img[0] + img[1] + img[2]).is_zero());
        }
        // t_- first, then s1 s2 s1, then t_-^{-1}.
        ParamVector w = tminus_by_hand(p4, 1);
        w = apply_word(GroupWord{Family::PIV, {Generator::S1, Generator::S2, Generator::S1}}, w);
        w = tminus_by_hand(w, -1);
        CHECK(apply(Family::PIV, Generator::S0, p4) == w);
    }
}

TEST_CASE("fundamental region membership") {
    CHECK(in_fundamental_region_p4(V({"0", "0", "0"})));
    CHECK(in_fundamental_region_p4(V({"0", "1/3", "-1/3"})));
    // v1 - v3 = -1/3 < 0: outside, and reduction needs a nontrivial word.
    CHECK_FALSE(in_fundamental_region_p4(V({"-1/3", "1/3", "0"})));
    CHECK_FALSE(reduce_to_fundamental_region_p4(V({"-1/3", "1/3", "0"})).word.letters.empty());
    CHECK_FALSE(in_fundamental_region_p4(V({"1", "-1", "0"})));
    CHECK_THROWS_AS(in_fundamental_region_p4(V({"1", "1", "1"})), ConstraintError);
    // Imaginary parts break ties on a wall.
    CHECK(in_fundamental_region_p4(V({"0", "1i", "-1i"})));
    CHECK_FALSE(in_fundamental_region_p4(V({"0", "-1i", "1i"})));
    CHECK_FALSE(in_fundamental_region_p4(V({"-1i", "1i", "0"})));
}

TEST_CASE("reduction replays exactly and respects the budget") {
    const auto r = reduce_to_fundamental_region_p4(V({"1", "-1", "0"}));
    CHECK(in_fundamental_region_p4(r.point));
    CHECK(apply_word(r.word, V({"1", "-1", "0"})) == r.point);
    CHECK(r.word.letters.size() == 3);

    const auto trivial = reduce_to_fundamental_region_p4(V({"0", "0", "0"}));
    CHECK(trivial.word.letters.empty());

    try {
        reduce_to_fundamental_region_p4(V({"100", "-100", "0"}), 3);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.partial_word().letters.size() == 3);
    }
    CHECK_THROWS_AS(reduce_to_fundamental_region_p4(V({"0", "0", "0"}), 0), ConstraintError);
}

TEST_CASE("orbit search") {
    const auto w = orbit_search(V({"0", "0", "0"}), V({"1", "-1", "0"}), Family::PIV, 3);
    REQUIRE(w.has_value());
    CHECK(apply_word(*w, V({"0", "0", "0"})) == V({"1", "-1", "0"}));
    CHECK(orbit_search(V({"1", "2"}), V({"1", "2"}), Family::PIII, 0)->letters.empty());
    CHECK_FALSE(orbit_search(V({"0", "0", "0"}), V({"1/2", "-1/2", "0"}), Family::PIV, 3).has_value());
    CHECK_THROWS_AS(orbit_search(V({"0", "0"}), V({"0", "0", "0"}), Family::PIV, 3), ConstraintError);
}

TEST_CASE("orbit search finds a shortest word (exhaustive oracle)") {
    const ParamVector a = V({"1/2", "1/3"});
    const auto gens = orbit_generators(Family::PIII);
    // Every target reachable in exactly k letters but not fewer must be found with k letters.
    std::vector<std::pair<ParamVector, std::size_t>> targets;
    for (Generator g1 : gens)
        for (Generator g2 : gens)
            for (Generator g3 : gens) {
                ParamVector img = apply_word(GroupWord{Family::PIII, {g1, g2, g3}}, a);
                targets.emplace_back(img, 3);
            }
    for (auto& [target, len] : targets) {
        for (std::size_t k = 0; k <= 2; ++k) {
            bool found = false;
            std::vector<std::vector<Generator>> words{{}};
            for (std::size_t step = 0; step < k; ++step) {
                std::vector<std::vector<Generator>> next;
                for (auto& w : words)
                    for (Generator g : gens) {
                        auto x = w;
                        x.push_back(g);
                        next.push_back(x);
                    }
                words = next;
            }
            for (auto& w : words) found = found || apply_word(GroupWord{Family::PIII, w}, a) == target;
            if (found) {
                len = k;
                break;
            }
        }
        const auto w = orbit_search(a, target, Family::PIII, 3);
        REQUIRE(w.has_value());
        CHECK(w->letters.size() == len);
        CHECK(apply_word(*w, a) == target);
    }
}

TEST_CASE("P_V birational map at exact points") {
    const ParamVector v1 = V({"0", "1", "0", "-1"});  // v3 - v1 = 0
    auto [q, p] = birational_pv(ComplexRational(2), ComplexRational(1), v1);
    CHECK(q == ComplexRational(2));
    CHECK(p == ComplexRational(-1));
    const ParamVector v2 = V({"0", "-3", "3", "0"});  // v3 - v1 = 3
    std::tie(q, p) = birational_pv(ComplexRational(2), ComplexRational(1), v2);
    CHECK(p == ComplexRational(2));
    CHECK_THROWS_AS(birational_pv(ComplexRational(1), ComplexRational(0), v1), PoleError);
    auto [qd, pd] = birational_pv(std::complex<double>(2), std::complex<double>(1), v2);
    CHECK(qd.real() == doctest::Approx(2));
    CHECK(pd.real() == doctest::Approx(2));
}

TEST_CASE("P_V birational map carries the original system to the (q, p) system") {
    const auto inst = FamilyInstance::parse(Family::PV, "generic,generic,generic,generic");
    const SystemRHS orig = pv_original_system(inst);
    const SystemRHS target = system_rhs(inst);
    const RationalFunction Q(Var::state("Q")), P(Var::state("P"));
    const RationalFunction v1(Var::param("v1")), v3(Var::param("v3"));
    const RationalFunction one(1);

    const RationalFunction q = Q / (Q - one);
    const RationalFunction p = -(Q - one).pow(2) * P + (v3 - v1) * (Q - one);
    // Chain rule along the original flow.
    const RationalFunction dq = q.partial(Var::state("Q")) * orig.rhs[0] + q.partial(Var::state("P")) * orig.rhs[1];
    const RationalFunction dp = p.partial(Var::state("Q")) * orig.rhs[0] + p.partial(Var::state("P")) * orig.rhs[1] +
                                p.partial(Var::time());
    const std::map<Var, RationalFunction> at{{Var::state("q"), q}, {Var::state("p"), p}};
    const std::map<Var, RationalFunction> plane{
        {Var::param("v4"), -RationalFunction(Var::param("v1")) - RationalFunction(Var::param("v2")) - v3}};
    CHECK((dq - target.rhs[0].substitute(at)).substitute(plane).is_zero());
    CHECK((dp - target.rhs[1].substitute(at)).substitute(plane).is_zero());
}

TEST_CASE("right-hand sides") {
    const auto p2 = system_rhs(FamilyInstance::parse(Family::PII, "-1/2"));
    CHECK(p2.variables == std::vector<Var>{Var::state("y"), Var::state("y", 1)});
    CHECK(p2.rhs[1] == parse_rational("2*y^3 + t*y - 1/2"));
    CHECK(p2.fixed_singular_times.empty());

    const auto p3 = system_rhs(FamilyInstance::parse(Family::PIII, "1,0"));
    CHECK(p3.fixed_singular_times == std::vector<double>{0.0});

    const auto xc = system_rhs(FamilyInstance::parse(Family::XC, "2"));
    CHECK(xc.rhs[0] == parse_rational("3*y - 2"));
    CHECK(xc.rhs[1] == parse_rational("y*(y - 1)/x"));

    const auto complex_c = system_rhs(FamilyInstance::parse(Family::XC, "1+1i"));
    CHECK(complex_c.bindings.count(Var::param("c")) == 1);
    CHECK(complex_c.rhs[0].variables().count(Var::param("c")) == 1);

    CHECK_THROWS_AS(system_rhs(FamilyInstance::parse(Family::PVI, "0,0,0,0")), ConstraintError);
    CHECK_THROWS_AS(pv_original_system(FamilyInstance::parse(Family::PII, "0")), ConstraintError);
    CHECK_THROWS_AS(riccati_curve(0), ConstraintError);
}
