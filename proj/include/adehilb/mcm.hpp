#ifndef ADEHILB_MCM_HPP
#define ADEHILB_MCM_HPP

#include <adehilb/groebner.hpp>
#include <adehilb/matrix.hpp>
#include <adehilb/poly.hpp>
#include <stdexcept>
#include <vector>

namespace adehilb {

class NoStabilizationError : public std::runtime_error {
public:
    explicit NoStabilizationError(const std::string& what) : std::runtime_error(what) {}
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b);
bool poly_matrix_equal(const PolyMatrix& a, const PolyMatrix& b);

/// Pair (phi, psi) of square polynomial matrices with phi psi = psi phi = f I.
struct MatrixFactorization {
    Polynomial f;
    PolyMatrix phi, psi;

    std::size_t size() const { return phi.size(); }
    /// Checks the defining identity exactly.
    bool verify() const;
};

/// 2x2 factorization of xz - y^{n+1} with coker(phi) = M_i; at n = i = 1 the
/// matrices are exactly the quadric-cone pair phi = [[x,-y],[-y,z]],
/// psi = [[z,y],[y,x]].
MatrixFactorization mf_an(int n, int i);

/// The literal E8 matrices over z^2 + x^3 + y^5: phi = zI - phi_k, psi = zI + phi_k.
MatrixFactorization mf_e8_m8();
MatrixFactorization mf_e8_m4();
/// The raw 4x4 / 10x10 blocks as printed.
PolyMatrix e8_phi8();
PolyMatrix e8_phi4();

/// Alternating sequence phi, psi, phi, ... of the requested length.
std::vector<PolyMatrix> periodic_resolution(const MatrixFactorization& m, std::size_t length);

/// dim Ext^1(coker phi1, coker phi2) over R = S/(f) by truncated exact linear
/// algebra on the 2-periodic resolutions; the degree bound is raised until the
/// reported dimension is stable for two consecutive increments.
/// Throws NoStabilizationError at the ceiling (default 20; pass 0 to use it).
long ext1_oracle(const MatrixFactorization& m1, const MatrixFactorization& m2,
                 int degree_ceiling = 0);

/// Oracle result plus the bound at which it stabilized.
struct Ext1Result {
    long dim;
    int stabilized_at;
};
Ext1Result ext1_oracle_detail(const MatrixFactorization& m1, const MatrixFactorization& m2,
                              int degree_ceiling = 0);

enum class Orientation { PsiFirst, PhiFirst };

/// Lengths (s, t) of ker(d0) and ker(d1)/im(d0) for the periodic complex of
/// the factorization reduced into the quotient algebra of z.
std::pair<long, long> restriction_lengths(const MatrixFactorization& m, const GroebnerBasis& z,
                                          Orientation orient = Orientation::PsiFirst);

} // namespace adehilb

#endif
