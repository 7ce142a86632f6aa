#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <adehilb/staircase.hpp>
#include <adehilb/tangent.hpp>

#include <random>
#include <set>

using namespace adehilb;

namespace {

// independent brute-force oracle: grow order ideals in all orders, dedup by set
std::vector<std::set<LatticePoint>> brute_force_staircases(int n, int d) {
    std::set<std::set<LatticePoint>> frontier = {{{0, 0}}};
    auto candidates = lattice_members(n, 2 * d * (n + 1) + 2);
    for (int step = 1; step < d; ++step) {
        std::set<std::set<LatticePoint>> next;
        for (const auto& D : frontier)
            for (const auto& p : candidates) {
                if (D.count(p)) continue;
                std::set<LatticePoint> D2 = D;
                D2.insert(p);
                std::vector<LatticePoint> v(D2.begin(), D2.end());
                if (is_staircase(n, v)) next.insert(D2);
            }
        frontier = std::move(next);
    }
    return {frontier.begin(), frontier.end()};
}

} // namespace

TEST_CASE("lattice membership") {
    Lattice l1{1};
    CHECK(l1.member({0, 0}));
    CHECK(l1.member({1, 1}));
    CHECK(!l1.member({1, 0}));
    CHECK(lattice_members(1, 2) ==
          std::vector<LatticePoint>{{0, 0}, {0, 2}, {1, 1}, {2, 0}});
    Lattice l2{2};
    CHECK(!l2.member({2, 4}));  // no N-solution to 3x+y=2, y+3z=4
    CHECK(l2.member({4, 1}));
}

TEST_CASE("staircase counts for n=1: derived values and oracle agreement") {
    // the derived counts are 1, 3, 5, 9, 14, 24 (two independent enumerations)
    const std::vector<std::size_t> expected = {1, 3, 5, 9, 14, 24};
    for (int d = 1; d <= 6; ++d) {
        auto fast = enumerate_staircases(1, d);
        auto slow = brute_force_staircases(1, d);
        CHECK(fast.size() == expected[d - 1]);
        CHECK(fast.size() == slow.size());
        std::set<std::set<LatticePoint>> fs;
        for (const auto& s : fast) fs.insert({s.delta.begin(), s.delta.end()});
        std::set<std::set<LatticePoint>> ss(slow.begin(), slow.end());
        CHECK(fs == ss);
    }
}

TEST_CASE("the diagonal chain {(0,0),(1,1),(2,2)} is not a staircase") {
    // (2,0) + (0,2) = (2,2) = 2*(1,1): the complement is not closed; this is
    // the relation xz = y^2 on the cone
    CHECK(!is_staircase(1, {{0, 0}, {1, 1}, {2, 2}}));
    CHECK(is_staircase(1, {{0, 0}, {2, 0}, {4, 0}}));
    CHECK(is_staircase(1, {{0, 0}, {1, 1}}));
}

TEST_CASE("staircase counts for n=2 (frozen derived values)") {
    const std::vector<std::size_t> expected = {1, 3, 6, 11};
    for (int d = 1; d <= 4; ++d)
        CHECK(enumerate_staircases(2, d).size() == expected[d - 1]);
}

TEST_CASE("complement closure re-check for every enumerated staircase") {
    Lattice lat{1};
    for (int d = 1; d <= 6; ++d)
        for (const auto& s : enumerate_staircases(1, d)) {
            CHECK(is_staircase(1, s.delta));
            // E(Delta) + Lambda_0 stays in E(Delta), checked on a window
            for (const auto& e : lattice_members(1, 10)) {
                if (s.contains(e)) continue;
                for (const auto& g : lat.generators()) {
                    LatticePoint q{e.first + g.first, e.second + g.second};
                    CHECK(!s.contains(q));
                }
            }
        }
}

TEST_CASE("corner set and border examples") {
    Staircase origin{1, {{0, 0}}};
    CHECK(corner_set(origin) == std::vector<LatticePoint>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(border(origin) == std::vector<LatticePoint>{{0, 2}, {1, 1}, {2, 0}});

    Staircase two{1, {{0, 0}, {1, 1}}};
    auto c = corner_set(two);
    CHECK(std::find(c.begin(), c.end(), LatticePoint{2, 0}) != c.end());
    CHECK(std::find(c.begin(), c.end(), LatticePoint{0, 2}) != c.end());
    auto b = border(two);
    CHECK(b == std::vector<LatticePoint>{{0, 2}, {2, 0}, {1, 3}, {2, 2}, {3, 1}});
}

TEST_CASE("corner set is contained in the border, d <= 6") {
    for (int d = 1; d <= 6; ++d)
        for (const auto& s : enumerate_staircases(1, d)) {
            auto c = corner_set(s);
            auto b = border(s);
            CHECK(b.size() >= c.size());
            for (const auto& p : c)
                CHECK(std::find(b.begin(), b.end(), p) != b.end());
        }
}

TEST_CASE("discriminant examples and alternation") {
    CHECK(discriminant(1, {{0, 0}}).str() == "1");
    Polynomial d2 = discriminant(1, {{0, 0}, {1, 1}});
    // u2 v2 - u1 v1 in variables u1, u2, v1, v2
    std::vector<std::string> vars = {"u1", "u2", "v1", "v2"};
    CHECK(d2 == parse_polynomial("u2*v2 - u1*v1", vars));

    // swapping two points negates the polynomial
    Polynomial a = discriminant(1, {{0, 0}, {1, 1}, {2, 0}});
    Polynomial b = discriminant(1, {{1, 1}, {0, 0}, {2, 0}});
    CHECK(a == -b);
    CHECK_THROWS_AS(discriminant(1, {{0, 0}, {0, 0}}), std::invalid_argument);

    // random permutations: sigma . det = sgn(sigma) det, d <= 4
    std::mt19937 rng(11);
    std::vector<LatticePoint> pts = {{0, 0}, {1, 1}, {2, 0}, {0, 2}};
    Polynomial base = discriminant(1, pts);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<LatticePoint> perm = pts;
        std::shuffle(perm.begin(), perm.end(), rng);
        // parity of the permutation
        int inv = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) {
                std::size_t pi = std::find(pts.begin(), pts.end(), perm[i]) - pts.begin();
                std::size_t pj = std::find(pts.begin(), pts.end(), perm[j]) - pts.begin();
                if (pi > pj) ++inv;
            }
        Polynomial p = discriminant(1, perm);
        CHECK(p == (inv % 2 == 0 ? base : -base));
    }
}

TEST_CASE("discriminant terms all have even total degree for n = 1") {
    for (int d = 1; d <= 4; ++d)
        for (const auto& s : enumerate_staircases(1, d)) {
            Polynomial disc = discriminant(1, s.delta);
            for (const auto& [e, c] : disc.terms()) CHECK(total_degree(e) % 2 == 0);
        }
}

TEST_CASE("chart for the singleton staircase is the quadric cone") {
    Staircase origin{1, {{0, 0}}};
    ChartPresentation chart = chart_relations(origin);
    CHECK(chart.variables.size() == 3);  // |B| * |Delta| = 3 * 1
    REQUIRE(chart.relations.size() == 1);
    // relation c1 c3 - c2^2 up to sign, in the border variables
    // border order: (0,2), (1,1), (2,0) -> c1 = C^{(0,2)}, c2 = C^{(1,1)}, c3 = C^{(2,0)}
    Polynomial r = chart.relations[0];
    Polynomial expect = parse_polynomial("C0a2b0c0*C2a0b0c0 - C1a1b0c0^2", chart.variables);
    CHECK((r == expect || r == -expect));
    CHECK_THROWS_AS(chart_relations(Staircase{2, {{0, 0}}}), std::invalid_argument);
}

TEST_CASE("chart variable count is |B| x |Delta|") {
    for (int d = 1; d <= 3; ++d)
        for (const auto& s : enumerate_staircases(1, d)) {
            ChartPresentation chart = chart_relations(s);
            CHECK(chart.variables.size() == border(s).size() * s.size());
        }
}

TEST_CASE("jacobian corank at the origin equals the tangent dimension, d <= 2") {
    for (int d = 1; d <= 2; ++d)
        for (const auto& s : enumerate_staircases(1, d)) {
            ChartPresentation chart = chart_relations(s);
            long corank = chart_jacobian_corank_at_origin(chart);
            long tangent = tangent_dimension(staircase_ideal(s));
            CHECK(corank == tangent);
        }
}

TEST_CASE("chart membership") {
    Staircase diag{1, {{0, 0}, {1, 1}}};
    GroebnerBasis own = groebner(staircase_ideal(diag), MonomialOrder::degrevlex());
    CHECK(chart_membership(own, diag));

    // colength mismatch is rejected
    Staircase origin{1, {{0, 0}}};
    CHECK_THROWS_AS(chart_membership(own, origin), std::invalid_argument);

    // a reduced point with u-coordinate zero: x = u^2 = 0, so {1, x} cannot
    // span and the axis staircase {(0,0),(2,0)} rejects it; {(0,0),(0,2)} accepts
    IdealPresentation pt;
    pt.variables = {"x", "y", "z"};
    pt.relations = {parse_polynomial("x*z - y^2", pt.variables)};
    // V(x, y, z - 1) + V(x, y, z): colength 2 on the cone (z-axis pair)
    pt.generators = {parse_polynomial("x", pt.variables), parse_polynomial("y", pt.variables),
                     parse_polynomial("z^2 - z", pt.variables)};
    GroebnerBasis zgb = groebner(pt, MonomialOrder::degrevlex());
    Staircase uaxis{1, {{0, 0}, {2, 0}}};
    Staircase vaxis{1, {{0, 0}, {0, 2}}};
    CHECK(!chart_membership(zgb, uaxis));
    CHECK(chart_membership(zgb, vaxis));
}

TEST_CASE("every small fixture lies in at least one chart") {
    std::vector<IdealPresentation> fixtures;
    for (int d = 1; d <= 3; ++d)
        for (const auto& s : enumerate_staircases(1, d)) fixtures.push_back(staircase_ideal(s));
    // plus a perturbed non-monomial ideal of colength 2
    IdealPresentation p;
    p.variables = {"x", "y", "z"};
    p.relations = {parse_polynomial("x*z - y^2", p.variables)};
    p.generators = {parse_polynomial("y", p.variables), parse_polynomial("x + z", p.variables)};
    fixtures.push_back(p);
    for (const auto& f : fixtures) {
        GroebnerBasis g = groebner(f, MonomialOrder::degrevlex());
        std::size_t d = standard_monomials(g).size();
        bool in_some = false;
        for (const auto& s : enumerate_staircases(1, static_cast<int>(d)))
            if (chart_membership(g, s)) in_some = true;
        CHECK(in_some);
    }
}

TEST_CASE("weight initial ideal of a chart member is the staircase ideal") {
    // Delta = {(0,0),(1,1)}: the pair {uv = 1, uv = -1} has chart generators
    // x - 1, z - 1; the torus weight (1,1) on (u,v) gives (2,2,2) on (x,y,z)
    IdealPresentation p;
    p.variables = {"x", "y", "z"};
    p.relations = {parse_polynomial("x*z - y^2", p.variables)};
    p.generators = {parse_polynomial("x - 1", p.variables),
                    parse_polynomial("z - 1", p.variables)};
    Staircase diag{1, {{0, 0}, {1, 1}}};
    CHECK(same_ideal(weight_initial_ideal(p, {2, 2, 2}), staircase_ideal(diag)));

    // Delta = {(0,0),(2,0)}: the u-axis pair {u = 1, u = 2} has chart
    // generators x^2 - (5x - 4), y, z; torus weight (1,3) gives (2,4,6)
    IdealPresentation q;
    q.variables = p.variables;
    q.relations = p.relations;
    q.generators = {parse_polynomial("x^2 - 5*x + 4", p.variables),
                    parse_polynomial("y", p.variables), parse_polynomial("z", p.variables)};
    Staircase uaxis{1, {{0, 0}, {2, 0}}};
    CHECK(same_ideal(weight_initial_ideal(q, {2, 4, 6}), staircase_ideal(uaxis)));
}

TEST_CASE("syzygy decomposition classes from adjacent corners") {
    // maximal ideal on A_1: corners (2,0),(1,1),(0,2) -> P + P
    Staircase m1{1, {{0, 0}}};
    CHECK(staircase_syzygy_classes(m1) == std::vector<int>{1, 1});
    // (x, z): free syzygy
    Staircase diag{1, {{0, 0}, {1, 1}}};
    CHECK(staircase_syzygy_classes(diag) == std::vector<int>{0});
    // A_2 maximal ideal: M1 + M2 in some order
    Staircase m2{2, {{0, 0}}};
    auto cls = staircase_syzygy_classes(m2);
    std::sort(cls.begin(), cls.end());
    CHECK(cls == std::vector<int>{1, 2});
}
