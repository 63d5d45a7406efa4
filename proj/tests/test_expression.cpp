#include "painleve/errors.hpp"
#include "painleve/expression.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace painleve;

namespace {

RationalFunction R(const char* text, std::vector<std::string> params = {}) { return parse_rational(text, params); }

std::size_t error_offset(const char* text) {
    try {
        parse_expression(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("expected a ParseError for " << text);
    return 0;
}

}  // namespace

TEST_CASE("precedence and associativity") {
    CHECK(R("1 + 2*3") == RationalFunction(7));
    CHECK(R("2*3^2") == RationalFunction(18));
    CHECK(R("-2^2") == RationalFunction(-4));
    CHECK(R("8/2/2") == RationalFunction(2));
    CHECK(R("1 - 2 - 3") == RationalFunction(-4));
    CHECK(R("(1 + 2)*3") == RationalFunction(9));
    CHECK(R("x/y*y") == R("x"));
}

TEST_CASE("variables, primes and parameters") {
    const DiffExpr e = parse_expression("y'' - 2*y^3 - t*y - alpha", {"alpha"});
    const auto vars = e.free_variables();
    CHECK(vars.count(Var::state("y", 2)) == 1);
    CHECK(vars.count(Var::state("y")) == 1);
    CHECK(vars.count(Var::time()) == 1);
    CHECK(vars.count(Var::param("alpha")) == 1);
    CHECK(vars.size() == 4);
}

TEST_CASE("parse errors carry offsets") {
    CHECK(error_offset("2y") == 1);
    CHECK(error_offset("(x)(y)") == 3);
    CHECK(error_offset("x +") == 3);
    CHECK(error_offset("x^-1") == 2);
    CHECK(error_offset("(x + 1") == 6);
    CHECK(error_offset("x $ y") == 2);
    CHECK_THROWS_WITH_AS(parse_expression("2y"), doctest::Contains("insert '*'"), ParseError);
    CHECK_THROWS_AS(parse_expression("alpha'", std::vector<std::string>{"alpha"}), ParseError);
    CHECK_THROWS_AS(parse_expression("t'"), ParseError);
    CHECK_THROWS_AS(parse_expression("z", SymbolTable{{}, {"x", "y"}}), ParseError);
    CHECK_NOTHROW(parse_expression("x*y'", SymbolTable{{}, {"x", "y"}}));
}

TEST_CASE("symbolic exponents are unsupported, not parse errors") {
    CHECK_THROWS_AS(parse_expression("y^c*(y - 1)/x", std::vector<std::string>{"c"}), UnsupportedExponent);
    CHECK_THROWS_AS(parse_expression("y^(2)"), UnsupportedExponent);
}

TEST_CASE("division by an identically zero expression") {
    CHECK_THROWS_AS(R("x/(y - y)"), PoleError);
}

TEST_CASE("tree derivative agrees with the canonical derivation") {
    for (const char* text : {"y^3 + t*y", "1/(y - t)", "y'*y/(t^2 + 1)", "alpha*y^2 - y'"}) {
        const DiffExpr e = parse_expression(text, {"alpha"});
        CHECK(to_rational(total_derivative(e)) == to_rational(e).total_derivative());
    }
    CHECK(to_rational(total_derivative(parse_expression("t^2"))) == R("2*t"));
    CHECK(to_rational(total_derivative(parse_expression("y'"))) == R("y''"));
}

TEST_CASE("canonical equality") {
    CHECK(canonical_equal(parse_expression("(x + 1)^2"), parse_expression("x^2 + 2*x + 1")));
    CHECK(canonical_equal(parse_expression("x/(x*y)"), parse_expression("1/y")));
    CHECK_FALSE(canonical_equal(parse_expression("x"), parse_expression("y")));
}

TEST_CASE("property: printed trees parse back to the same value") {
    testing::Gen gen(99);
    const std::vector<DiffExpr> leaves = {DiffExpr::variable(Var::state("x")), DiffExpr::variable(Var::state("y")),
                                          DiffExpr::variable(Var::time()),
                                          DiffExpr::variable(Var::state("y", 1))};
    for (int i = 0; i < 300; ++i) {
        DiffExpr e = DiffExpr::constant(gen.rational(9, 5));
        for (int k = 0; k < 5; ++k) {
            const DiffExpr leaf = gen.coin() ? leaves[gen.integer(0, 3)] : DiffExpr::constant(gen.rational(9, 5));
            switch (gen.integer(0, 4)) {
                case 0: e = e + leaf; break;
                case 1: e = e - leaf; break;
                case 2: e = e * leaf; break;
                case 3: e = e.pow(static_cast<unsigned>(gen.integer(0, 2))); break;
                default: e = -e; break;
            }
        }
        const DiffExpr back = parse_expression(to_string(e));
        CHECK(canonical_equal(e, back));
        CHECK(to_rational(back) == to_rational(e));
    }
}
