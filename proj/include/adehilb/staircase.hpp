#ifndef ADEHILB_STAIRCASE_HPP
#define ADEHILB_STAIRCASE_HPP

#include <adehilb/groebner.hpp>
#include <adehilb/poly.hpp>
#include <utility>
#include <vector>

namespace adehilb {

/// Point of the exponent lattice of the A_n coordinate ring.
using LatticePoint = std::pair<long, long>;

/// The semigroup lattice generated by (n+1,0), (1,1), (0,n+1).
struct Lattice {
    int n;
    std::vector<LatticePoint> generators() const {
        return {{n + 1, 0}, {1, 1}, {0, n + 1}};
    }
    /// Membership by bounded search over N-combinations of the generators.
    bool member(const LatticePoint& p) const;
};

/// Finite order ideal in the lattice; the complement is closed under
/// semigroup addition.
struct Staircase {
    int n;
    std::vector<LatticePoint> delta;  // sorted by (degree, first coordinate)

    std::size_t size() const { return delta.size(); }
    bool contains(const LatticePoint& p) const;
};

/// All lattice members with coordinate sum <= degree_bound.
std::vector<LatticePoint> lattice_members(int n, long degree_bound);

bool is_staircase(int n, const std::vector<LatticePoint>& delta);

/// All staircases of cardinality d, in a deterministic order.
std::vector<Staircase> enumerate_staircases(int n, int d);

/// Minimal semigroup generators of the complement E(Delta).
std::vector<LatticePoint> corner_set(const Staircase& s);

/// (union over a in Lambda_0 of (Delta + a)) minus Delta.
std::vector<LatticePoint> border(const Staircase& s);

/// Determinant of the d x d matrix [u_i^{p_j} v_i^{q_j}] in variables
/// u1..ud, v1..vd; S_d-alternating.
Polynomial discriminant(int n, const std::vector<LatticePoint>& points);

/// The monomial u^a v^b as an element of C[x,y,z]/(xz - y^{n+1}).
Polynomial lattice_monomial(int n, const LatticePoint& p);

/// The torus-fixed ideal I_Delta as an ideal presentation over x, y, z.
IdealPresentation staircase_ideal(const Staircase& s);

/// Chart coordinate ring data: variables C^alpha_beta for alpha in the
/// border, beta in Delta, and the relation ideal from two-factorization
/// elimination over Delta + Lambda_0 + Lambda_0.
struct ChartPresentation {
    Staircase delta;
    std::vector<std::string> variables;  // one name per (alpha, beta)
    std::vector<LatticePoint> alphas;    // border points, aligned with names
    std::vector<LatticePoint> betas;     // delta points, aligned with names
    std::vector<Polynomial> relations;
};

/// Charts are implemented for the quadric cone (n = 1) per the source
/// construction; other n are rejected.
ChartPresentation chart_relations(const Staircase& s);

/// Number of variables minus the rank of the relation Jacobian at the origin.
long chart_jacobian_corank_at_origin(const ChartPresentation& chart);

/// True iff the monomials with exponents in Delta span the quotient algebra.
bool chart_membership(const GroebnerBasis& z, const Staircase& s);

/// Syzygy decomposition of the torus-fixed ideal I_Delta: class 0 entries are
/// free summands, class c > 0 are M_c, read off adjacent-corner lcm weights.
std::vector<int> staircase_syzygy_classes(const Staircase& s);

} // namespace adehilb

#endif
