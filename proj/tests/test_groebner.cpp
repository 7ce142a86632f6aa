#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <adehilb/groebner.hpp>
#include <adehilb/ideal_io.hpp>

#include <random>

using namespace adehilb;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};
const std::vector<std::string> XYZW = {"x", "y", "z", "w"};

IdealPresentation ideal(const std::vector<std::string>& vars,
                        const std::vector<std::string>& gens,
                        const std::vector<std::string>& rels = {}) {
    IdealPresentation i;
    i.variables = vars;
    for (const auto& r : rels) i.relations.push_back(parse_polynomial(r, vars));
    for (const auto& g : gens) i.generators.push_back(parse_polynomial(g, vars));
    return i;
}

// the seven generators of the length-8 ideal on the twisted cubic cone
IdealPresentation j0_ideal(bool with_relations) {
    std::vector<std::string> rels;
    if (with_relations) rels = {"x*z - y^2", "x*w - y*z", "y*w - z^2"};
    return ideal(XYZW, {"x^2", "x*y", "x*z - y^2", "x*w - y*z", "y*w - z^2", "z*w", "w^2"},
                 rels);
}

std::mt19937 rng(7);

Polynomial random_poly(const std::vector<std::string>& vars, int maxdeg) {
    Polynomial p(vars);
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, maxdeg), nterms(1, 4);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exponents e(vars.size(), 0);
        int rem = deg(rng);
        for (std::size_t v = 0; v + 1 < vars.size(); ++v) {
            std::uniform_int_distribution<int> part(0, rem);
            e[v] = part(rng);
            rem -= e[v];
        }
        e[vars.size() - 1] = rem;
        p.add_term(e, Rational(coef(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("groebner basics") {
    GroebnerBasis g = groebner(ideal(XY, {"x", "y"}), MonomialOrder::degrevlex());
    REQUIRE(g.elements.size() == 2);
    CHECK(normal_form(parse_polynomial("x^2 + y", XY), g).is_zero());

    GroebnerBasis g2 = groebner(ideal(XYZ, {"x*z - y^2"}), MonomialOrder::degrevlex());
    CHECK(g2.elements.size() == 1);  // a single generator is its own basis
}

TEST_CASE("normal form examples") {
    // under lex the leading term of xz - y^2 is xz, so xz reduces in one step
    GroebnerBasis gl = groebner(ideal(XYZ, {"x*z - y^2"}), MonomialOrder::lex());
    CHECK(normal_form(parse_polynomial("x*z", XYZ), gl) == parse_polynomial("y^2", XYZ));
    // standard degrevlex has y^2 on top instead, so xz is already reduced
    GroebnerBasis g = groebner(ideal(XYZ, {"x*z - y^2"}), MonomialOrder::degrevlex());
    CHECK(normal_form(parse_polynomial("x*z", XYZ), g) == parse_polynomial("x*z", XYZ));
    CHECK(normal_form(parse_polynomial("y^2", XYZ), g) == parse_polynomial("x*z", XYZ));
    CHECK(normal_form(parse_polynomial("1", XYZ), g) == parse_polynomial("1", XYZ));
    // member of the ideal reduces to zero
    CHECK(normal_form(parse_polynomial("y*x*z - y^3", XYZ), g).is_zero());
}

TEST_CASE("normal form is idempotent on random inputs") {
    GroebnerBasis g = groebner(ideal(XYZ, {"x*z - y^2", "y^3"}), MonomialOrder::degrevlex());
    for (int t = 0; t < 20; ++t) {
        Polynomial f = random_poly(XYZ, 5);
        Polynomial r = normal_form(f, g);
        CHECK(normal_form(f - r, g).is_zero());
        CHECK(normal_form(r, g) == r);
    }
}

TEST_CASE("every S-pair of a reduced basis reduces to zero") {
    for (auto& i : {ideal(XYZ, {"x*z - y^2", "y^3"}),
                    ideal(XYZ, {"y", "x + z"}, {"x*z - y^2"}),
                    j0_ideal(true)}) {
        GroebnerBasis g = groebner(i, MonomialOrder::degrevlex());
        const auto& e = g.elements;
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                auto [ea, ca] = e[a].leading_term(g.order);
                auto [eb, cb] = e[b].leading_term(g.order);
                Exponents l = exp_lcm(ea, eb);
                Polynomial s = e[a].times_monomial(exp_div(l, ea), Rational(1) / ca) -
                               e[b].times_monomial(exp_div(l, eb), Rational(1) / cb);
                CHECK(normal_form(s, g).is_zero());
            }
        // elements are pairwise reduced: no term divisible by another lead
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = 0; b < e.size(); ++b) {
                if (a == b) continue;
                auto [eb, cb] = e[b].leading_term(g.order);
                for (const auto& [t, c] : e[a].terms()) CHECK(!exp_divides(eb, t));
            }
    }
}

TEST_CASE("standard monomials and colength") {
    CHECK(standard_monomials(groebner(ideal(XY, {"x", "y"}), MonomialOrder::degrevlex())) ==
          std::vector<Exponents>{{0, 0}});
    CHECK(colength(ideal(XYZ, {"x", "y", "z"})) == 1);
    CHECK_THROWS_AS(colength(ideal(XYZ, {"x*z - y^2"})), InfiniteColengthError);
    // quotient is Q[x]/(x^2) on the quadric cone
    CHECK(colength(ideal(XYZ, {"y", "x + z"}, {"x*z - y^2"})) == 2);
}

TEST_CASE("J0 has colength 8 and hilbert function (1,4,3)") {
    IdealPresentation j0 = j0_ideal(false);
    GroebnerBasis g = groebner(j0, MonomialOrder::degrevlex());
    CHECK(standard_monomials(g).size() == 8);
    CHECK(hilbert_function(j0) == std::vector<long>{1, 4, 3});
    CHECK(colength(ideal(XYZW, {"x", "y", "z", "w"})) == 1);
    CHECK(hilbert_function(ideal(XYZW, {"x", "y", "z", "w"})) == std::vector<long>{1});
}

TEST_CASE("colength is order-invariant") {
    for (auto& i : {ideal(XYZ, {"y", "x + z"}, {"x*z - y^2"}),
                    ideal(XYZ, {"x", "y", "z^3"}),
                    ideal(XY, {"x^2 + y", "y^2"})}) {
        auto drl = standard_monomials(groebner(i, MonomialOrder::degrevlex())).size();
        auto lx = standard_monomials(groebner(i, MonomialOrder::lex())).size();
        CHECK(drl == lx);
    }
}

TEST_CASE("syzygies: Koszul examples") {
    auto s = syzygies(ideal(XY, {"x", "y"}), MonomialOrder::degrevlex());
    REQUIRE(s.size() == 1);
    CHECK(s[0][0] == parse_polynomial("y", XY));
    CHECK(s[0][1] == parse_polynomial("-x", XY));

    auto s3 = syzygies(ideal(XYZ, {"x", "y", "z"}), MonomialOrder::degrevlex());
    CHECK(s3.size() == 3);
}

TEST_CASE("syzygy vectors annihilate the generator column") {
    for (auto& i : {ideal(XYZ, {"y", "x + z"}, {"x*z - y^2"}),
                    ideal(XYZ, {"x", "y", "z"}, {"x*z - y^2"}),
                    j0_ideal(true)}) {
        auto combined = i.combined();
        auto syz = syzygies(i, MonomialOrder::degrevlex());
        CHECK(!syz.empty());
        for (const auto& v : syz) {
            Polynomial dot(i.variables);
            for (std::size_t k = 0; k < combined.size(); ++k) dot += v[k] * combined[k];
            CHECK(dot.is_zero());
        }
    }
}

TEST_CASE("quadric cone syzygies exhibit the hypersurface multiple") {
    // generators (y, x+z) with relation xz - y^2: some syzygy must involve
    // the relation column with a nonzero coefficient
    auto syz = syzygies(ideal(XYZ, {"y", "x + z"}, {"x*z - y^2"}), MonomialOrder::degrevlex());
    bool uses_relation = false;
    for (const auto& v : syz) uses_relation = uses_relation || !v[2].is_zero();
    CHECK(uses_relation);
}

TEST_CASE("leading forms") {
    IdealPresentation lf = leading_forms(ideal(XY, {"x + x^2", "y"}));
    CHECK(same_ideal(lf, ideal(XY, {"x", "y"})));

    // homogeneous ideals are fixed points
    IdealPresentation i5 = ideal(XYZW, {"x^2", "x*y", "y^2", "z^2", "z*w", "w^2", "x*w + y*z"});
    CHECK(same_ideal(leading_forms(i5), i5));
    CHECK(same_ideal(leading_forms(leading_forms(j0_ideal(false))), leading_forms(j0_ideal(false))));

    // J0 is generated by quadrics already: its initial ideal is itself
    CHECK(hilbert_function(j0_ideal(false)) == std::vector<long>{1, 4, 3});

    CHECK_THROWS_AS(leading_forms(ideal(XY, {"x + 1", "y"})), std::invalid_argument);
}

TEST_CASE("leading forms of a curvilinear triple point") {
    // (y - x^2, x^3): the initial ideal at the origin is (y, x^3)
    IdealPresentation i = ideal(XY, {"y - x^2", "x^3"});
    CHECK(same_ideal(leading_forms(i), ideal(XY, {"y", "x^3"})));
    CHECK(hilbert_function(i) == std::vector<long>{1, 1, 1});
    CHECK(colength(i) == 3);
}

TEST_CASE("hilbert function sums to colength") {
    for (auto& i : {ideal(XYZ, {"y", "x + z"}, {"x*z - y^2"}),
                    ideal(XYZ, {"x", "y", "z^3"}),
                    j0_ideal(false),
                    ideal(XY, {"x^2 + y^3", "x*y"})}) {
        long total = 0;
        for (long h : hilbert_function(i)) total += h;
        CHECK(static_cast<std::size_t>(total) == colength(i));
    }
}

TEST_CASE("weight initial ideal") {
    // single f = u^3 - u with weight (1,1): top part u^3
    std::vector<std::string> uv = {"u", "v"};
    IdealPresentation w = weight_initial_ideal(ideal(uv, {"u^3 - u"}), {1, 1});
    CHECK(same_ideal(w, ideal(uv, {"u^3"})));

    // homogeneous ideal with weight proportional to (1,...,1) is unchanged
    IdealPresentation hom = ideal(XYZ, {"x*z - y^2", "x^2"});
    CHECK(same_ideal(weight_initial_ideal(hom, {2, 2, 2}), hom));

    CHECK_THROWS_AS(weight_initial_ideal(hom, {-1, 1, 1}), std::invalid_argument);
}

TEST_CASE("ideal json round trip") {
    IdealPresentation i = j0_ideal(true);
    IdealPresentation j = ideal_from_json(ideal_to_json(i));
    CHECK(same_ideal(i, j));
    CHECK(j.relations.size() == 3);
    CHECK_THROWS(ideal_from_json("{\"variables\": [\"x\"]}"));
}

TEST_CASE("module groebner and membership") {
    // U = m * {(y, -x)} + (f) S^2 on the quadric cone
    const MonomialOrder ord = MonomialOrder::degrevlex();
    Polynomial f = parse_polynomial("x*z - y^2", XYZ);
    PolyVec v = {parse_polynomial("y", XYZ), parse_polynomial("-x", XYZ)};
    std::vector<PolyVec> gens;
    for (int k = 0; k < 3; ++k) {
        Exponents e(3, 0);
        e[k] = 1;
        PolyVec w;
        for (const auto& p : v) w.push_back(p.times_monomial(e, Rational(1)));
        gens.push_back(w);
    }
    for (int pos = 0; pos < 2; ++pos) {
        PolyVec w(2, Polynomial(XYZ));
        w[pos] = f;
        gens.push_back(w);
    }
    auto gb = module_groebner(gens, ord);
    // v itself is not in m*v + f S^2 (Nakayama), but x*v is
    CHECK(!vec_is_zero(module_normal_form(v, gb, ord)));
    PolyVec xv = {parse_polynomial("x*y", XYZ), parse_polynomial("-x^2", XYZ)};
    CHECK(vec_is_zero(module_normal_form(xv, gb, ord)));
}
