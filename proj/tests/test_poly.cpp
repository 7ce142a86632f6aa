#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <adehilb/poly.hpp>

using namespace adehilb;

namespace {
const std::vector<std::string> XYZ = {"x", "y", "z"};
Polynomial P(const std::string& s) { return parse_polynomial(s, XYZ); }
}

TEST_CASE("parser grammar") {
    CHECK(P("x*z - y^2").str() == "-y^2 + x*z");  // degrevlex: y^2 > xz
    CHECK(P("1/2*x + 3").str() == "1/2*x + 3");
    CHECK(P("-x + x").is_zero());
    CHECK(P("x^3").degree() == 3);
    CHECK(P("(x + y)*(x - y)").str() == "x^2 - y^2");
    CHECK_THROWS_AS(P("2x"), std::invalid_argument);      // juxtaposition rejected
    CHECK_THROWS_AS(P("x*w"), std::invalid_argument);     // unknown variable
    CHECK_THROWS_AS(P("x +"), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    CHECK((P("x + y") * P("x - y")) == P("x^2 - y^2"));
    CHECK((P("x*z") - P("y^2")) == P("x*z - y^2"));
    CHECK(P("x*z - y^2").is_homogeneous());
    CHECK(!P("x + x^2").is_homogeneous());
    CHECK(P("x + 1").substitute(0, Rational(2)) == P("3"));
}

TEST_CASE("monomial orders") {
    MonomialOrder drl = MonomialOrder::degrevlex();
    MonomialOrder lex = MonomialOrder::lex();
    // degrevlex: degree first; at equal degree the last differing exponent,
    // smaller wins
    CHECK(drl.compare({3, 0, 0}, {0, 2, 0}) > 0);
    CHECK(drl.compare({1, 0, 1}, {0, 2, 0}) < 0);  // xz < y^2
    CHECK(lex.compare({1, 0, 1}, {0, 2, 0}) > 0);  // x beats y in lex
    // weight order: u^3 - u with weight (1,1,1) keeps u^3 on top
    MonomialOrder w = MonomialOrder::weighted({1, 1, 1});
    CHECK(w.compare({3, 0, 0}, {1, 0, 0}) > 0);

    // multiplicative, 1 minimal (global order), total
    Exponents one(3, 0);
    for (const Exponents& e : {Exponents{1, 2, 0}, Exponents{0, 0, 3}})
        for (const MonomialOrder& ord : {drl, lex, w}) {
            CHECK(ord.compare(e, one) > 0);
            CHECK(ord.compare(exp_mul(e, {1, 0, 0}), exp_mul(one, {1, 0, 0})) > 0);
            CHECK(ord.compare(e, e) == 0);
        }
}

TEST_CASE("leading and graded parts") {
    Polynomial f = P("x*z - y^2 + x^3");
    CHECK(f.leading_term(MonomialOrder::degrevlex()).first == Exponents{3, 0, 0});
    CHECK(f.lowest_degree_part() == P("x*z - y^2"));
    CHECK(f.top_weight_part({1, 1, 1}) == P("x^3"));
    CHECK(f.top_weight_part({1, 1, 2}) == P("x^3 + x*z"));
    CHECK(f.degree_part(2) == P("x*z - y^2"));
}

TEST_CASE("printing is canonical and parse round-trips") {
    for (const std::string& s :
         {"-y^2 + x*z", "x^2 + 2*x*y + y^2", "1/3*x^4 - 7*z", "x", "5"}) {
        Polynomial p = P(s);
        CHECK(parse_polynomial(p.str(), XYZ) == p);
        CHECK(p.str() == s);
    }
}
