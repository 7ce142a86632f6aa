#ifndef ADEHILB_TANGENT_HPP
#define ADEHILB_TANGENT_HPP

#include <adehilb/dynkin.hpp>
#include <adehilb/groebner.hpp>
#include <cstddef>
#include <vector>

namespace adehilb {

struct TangentReport {
    std::size_t d = 0;
    long tangent_dim = 0;
    bool syzygy_free = false;
    enum class Verdict { Smooth, Singular, Withheld } verdict = Verdict::Withheld;
    std::size_t generators_used = 0;    // minimal generators of I_Z over R
    std::size_t syzygy_generators = 0;  // minimal generators of the first syzygy
};

/// Generators pruned to a minimal generating set of I_Z over R = S/(relations)
/// (linear algebra modulo I0 + m*J).
IdealPresentation minimal_presentation(const IdealPresentation& i);

/// dim Hom_R(I_Z, O_Z): assignments on a minimal generator set respecting
/// every R-syzygy (S-syzygies of (gens, relations) projected to the
/// generator coordinates), as one exact linear system over the
/// standard-monomial basis.
long tangent_dimension(const IdealPresentation& i);

/// Minimal generator count of the first R-syzygy module of a minimal
/// generating set.
std::size_t syzygy_mu(const IdealPresentation& i);

/// Free first syzygy <=> mu equals r - 1.
bool syzygy_free(const IdealPresentation& i);

/// Full report; smooth <=> tangent = 2d <=> syzygy free (the verdict is
/// withheld for ambients that are not surfaces).
TangentReport smoothness_verdict(const IdealPresentation& i);

/// Evaluates s + sum a_i (s_i - t_i - d) = 2d with s = tangent_dimension,
/// (s_i, t_i) from the matrix-factorization restriction lengths; the
/// decomposition (a_i) is caller-supplied. Type A only.
bool counting_formula_check(const IdealPresentation& i, const ModuleSum& decomposition);

/// Indices of a subset of `vectors` whose images form a basis of the span in
/// T/(m T + I0 S^r); used to extract minimal syzygy generators.
std::vector<std::size_t> nakayama_basis_indices(const IdealPresentation& min_presentation,
                                                const std::vector<PolyVec>& vectors);

} // namespace adehilb

#endif
