#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <adehilb/ext_dim.hpp>
#include <adehilb/mcm.hpp>

using namespace adehilb;

namespace {
const std::vector<std::string> XYZ = {"x", "y", "z"};
Polynomial P(const std::string& s) { return parse_polynomial(s, XYZ); }
}

TEST_CASE("example a1 matrices are reproduced exactly") {
    MatrixFactorization m = mf_an(1, 1);
    CHECK(m.phi[0][0] == P("x"));
    CHECK(m.phi[0][1] == P("-y"));
    CHECK(m.phi[1][0] == P("-y"));
    CHECK(m.phi[1][1] == P("z"));
    CHECK(m.psi[0][0] == P("z"));
    CHECK(m.psi[0][1] == P("y"));
    CHECK(m.psi[1][0] == P("y"));
    CHECK(m.psi[1][1] == P("x"));
    CHECK(m.f == P("x*z - y^2"));
    CHECK(m.verify());
}

TEST_CASE("an factorizations satisfy the defining identity, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (int i = 1; i <= n; ++i) {
            MatrixFactorization m = mf_an(n, i);
            CHECK(m.verify());
        }
    CHECK_THROWS_AS(mf_an(3, 4), std::out_of_range);
}

TEST_CASE("a 2x2 factorization of a rank-1 module has det(phi) = f") {
    MatrixFactorization m = mf_an(3, 2);
    Polynomial det = m.phi[0][0] * m.phi[1][1] - m.phi[0][1] * m.phi[1][0];
    CHECK(det == m.f);
}

TEST_CASE("E8 matrices: phi8 identity and sizes") {
    MatrixFactorization m8 = mf_e8_m8();
    CHECK(m8.size() == 4);
    CHECK(m8.verify());  // equivalent to -phi8^2 = (x^3 + y^5) I_4

    MatrixFactorization m4 = mf_e8_m4();
    CHECK(m4.size() == 10);
    CHECK(m4.verify());
}

TEST_CASE("phi8 appears as the rows/columns {1,2,6,7} minor of phi4") {
    PolyMatrix p8 = e8_phi8();
    PolyMatrix p4 = e8_phi4();
    const std::size_t idx[4] = {0, 1, 5, 6};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(p8[i][j] == p4[idx[i]][idx[j]]);
}

TEST_CASE("periodic resolution alternates with product f I") {
    MatrixFactorization m = mf_an(1, 1);
    auto seq = periodic_resolution(m, 4);
    REQUIRE(seq.size() == 4);
    CHECK(poly_matrix_equal(seq[0], m.phi));
    CHECK(poly_matrix_equal(seq[1], m.psi));
    CHECK(poly_matrix_equal(seq[2], m.phi));
    PolyMatrix fi(2, std::vector<Polynomial>(2, Polynomial(XYZ)));
    fi[0][0] = fi[1][1] = m.f;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
        CHECK(poly_matrix_equal(poly_matrix_mul(seq[k], seq[k + 1]), fi));
    CHECK(periodic_resolution(m, 0).empty());
}

TEST_CASE("ext oracle on A1: Ext^1(P, P) = 1") {
    Ext1Result r = ext1_oracle_detail(mf_an(1, 1), mf_an(1, 1));
    CHECK(r.dim == 1);
    CHECK(r.stabilized_at <= 12);
}

TEST_CASE("ext oracle vanishes against a free module") {
    // free rank-1 factorization (f) * (1)
    MatrixFactorization free_mf;
    free_mf.f = P("x*z - y^2");
    free_mf.phi = {{P("x*z - y^2")}};
    free_mf.psi = {{P("1")}};
    CHECK(free_mf.verify());
    CHECK(ext1_oracle(free_mf, mf_an(1, 1)) == 0);
    CHECK(ext1_oracle(mf_an(1, 1), free_mf) == 0);
}

TEST_CASE("ext oracle arbitrates the A3 formula/walk discrepancy") {
    // The printed closed formula says 2 for (M2, M1) on A3; the literal tuple
    // walk says 1. The oracle sides with the walk: the value is 1, which also
    // matches the Auslander-Reiten duality computation
    // Ext^1(M2, M1) = D stable-Hom(M1, M2), a one-dimensional space. Pinned as
    // the regression value.
    Ext1Result r = ext1_oracle_detail(mf_an(3, 2), mf_an(3, 1));
    CHECK(r.dim == 1);
    CHECK(r.stabilized_at <= 12);
}

TEST_CASE("ext oracle is symmetric and matches the tuple walk on A_n, n <= 3") {
    // frozen ground truth: oracle = walk = trace-ideal values; the diagonal is
    // min{a, n+1-a} (stable End = R/(x, z, y^min)), not max{a, n+1-a}.
    for (int n = 1; n <= 3; ++n)
        for (int a = 1; a <= n; ++a)
            for (int b = a; b <= n; ++b) {
                long ab = ext1_oracle(mf_an(n, a), mf_an(n, b));
                long ba = ext1_oracle(mf_an(n, b), mf_an(n, a));
                CHECK(ab == ba);
                CHECK(ab == ext_dim_walk(make_type('A', n), a, b).tally);
            }
    CHECK(ext1_oracle(mf_an(2, 1), mf_an(2, 1)) == 1);
    CHECK(ext1_oracle(mf_an(3, 2), mf_an(3, 2)) == 2);  // min{2, 2}
}

TEST_CASE("hypersurface mismatch is rejected") {
    CHECK_THROWS_AS(ext1_oracle(mf_an(1, 1), mf_an(2, 1)), std::invalid_argument);
}

TEST_CASE("restriction lengths at the reduced origin") {
    GroebnerBasis z = groebner_basis({P("x"), P("y"), P("z")}, XYZ, MonomialOrder::degrevlex());
    auto [s, t] = restriction_lengths(mf_an(1, 1), z);
    CHECK(s == 2);
    CHECK(t == 2);
    // both orientations agree here (all entries in the maximal ideal)
    auto [s2, t2] = restriction_lengths(mf_an(1, 1), z, Orientation::PhiFirst);
    CHECK(s2 == 2);
    CHECK(t2 == 2);
}

TEST_CASE("restriction lengths of a free factorization") {
    MatrixFactorization free_mf;
    free_mf.f = P("x*z - y^2");
    free_mf.phi = {{P("x*z - y^2")}};
    free_mf.psi = {{P("1")}};
    // colength 2 fixture on the cone
    GroebnerBasis z = groebner_basis({P("y"), P("x + z"), P("x*z - y^2")}, XYZ,
                                     MonomialOrder::degrevlex());
    // s = colength * rank(matrix size), t = 0: psi = (1) is injective on O_Z
    auto [s, t] = restriction_lengths(free_mf, z, Orientation::PhiFirst);
    CHECK(s == 2);  // ker(phi = f = 0 on O_Z) is everything, size 1 * colength 2
    CHECK(t == 0);
    auto [s1, t1] = restriction_lengths(free_mf, z, Orientation::PsiFirst);
    CHECK(s1 == 0);  // psi = identity has no kernel
    CHECK(t1 == 0);
}

TEST_CASE("restriction torsion symmetry and bounds on fixtures") {
    GroebnerBasis z2 = groebner_basis({P("x"), P("z"), P("x*z - y^2")}, XYZ,
                                      MonomialOrder::degrevlex());
    for (int i = 1; i <= 2; ++i) {
        auto [s, t] = restriction_lengths(mf_an(2, i), z2);
        CHECK(t >= 0);
        CHECK(t <= s);
        CHECK(s <= 2 * 2 * 2);  // 2 rank * colength bound with matrix size 2
        // t from (d1, d2) equals t from (d0, d1) by rank-nullity of the square blocks
        auto [s_rev, t_rev] = restriction_lengths(mf_an(2, i), z2, Orientation::PhiFirst);
        CHECK(t_rev == t);
    }
    // z must contain f
    GroebnerBasis bad = groebner_basis({P("x - 1"), P("y - 1"), P("z")}, {"x", "y", "z"},
                                       MonomialOrder::degrevlex());
    CHECK_THROWS_AS(restriction_lengths(mf_an(2, 1), bad), std::invalid_argument);
}
