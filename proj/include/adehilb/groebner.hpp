#ifndef ADEHILB_GROEBNER_HPP
#define ADEHILB_GROEBNER_HPP

#include <adehilb/poly.hpp>
#include <stdexcept>
#include <vector>

namespace adehilb {

class InfiniteColengthError : public std::runtime_error {
public:
    InfiniteColengthError() : std::runtime_error("quotient algebra is infinite-dimensional") {}
};

/// An ideal of S/(hypersurface_relations) presented by generators in the
/// ambient polynomial ring S.
struct IdealPresentation {
    std::vector<std::string> variables;
    std::vector<Polynomial> relations;   // the I0 generators, possibly empty
    std::vector<Polynomial> generators;  // nonempty

    /// generators followed by relations, all over `variables`.
    std::vector<Polynomial> combined() const;
};

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<std::string> variables;
    std::vector<Polynomial> elements;  // reduced, monic
};

/// Remainder of multivariate division; no term divisible by any leading term
/// of the basis. If `quotients` is non-null it receives one cofactor per
/// basis element such that f = sum(q_i * basis_i) + remainder.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order,
                       std::vector<Polynomial>* quotients = nullptr);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

/// Reduced Groebner basis of <gens>. If `cofactors` is non-null it receives,
/// per basis element, its expression in the input generators.
GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens,
                             const std::vector<std::string>& vars,
                             const MonomialOrder& order,
                             std::vector<std::vector<Polynomial>>* cofactors = nullptr);
GroebnerBasis groebner(const IdealPresentation& i, const MonomialOrder& order);

/// All monomials not divisible by any leading term, sorted by (degree, lex).
/// Throws InfiniteColengthError when the set is not finite.
std::vector<Exponents> standard_monomials(const GroebnerBasis& g);

std::size_t colength(const IdealPresentation& i);

/// Generating set of the first syzygy module of (generators, relations) over
/// the ambient ring, via Groebner/Schreyer lifting. Each vector has one entry
/// per combined() element.
std::vector<std::vector<Polynomial>> syzygies(const IdealPresentation& i,
                                              const MonomialOrder& order);

/// Ideal of lowest-degree forms of <generators + relations>, certified by
/// colength preservation. Output is a homogeneous ideal with no relations.
IdealPresentation leading_forms(const IdealPresentation& i);

/// Hilbert function (h_0, h_1, ...) of the graded quotient by leading_forms.
std::vector<long> hilbert_function(const IdealPresentation& i);

/// Ideal of highest-weight parts for a nonnegative weight per variable.
IdealPresentation weight_initial_ideal(const IdealPresentation& i,
                                       const std::vector<long>& weights);

/// True iff f lies in the ideal.
bool ideal_contains(const GroebnerBasis& g, const Polynomial& f);
/// True iff the two presentations generate the same ideal of S.
bool same_ideal(const IdealPresentation& a, const IdealPresentation& b);

// ---- submodules of a free module S^m (TOP order: monomial first, then
// lowest position) ----

using PolyVec = std::vector<Polynomial>;

bool vec_is_zero(const PolyVec& v);
/// Groebner basis of the submodule generated by `gens`; reduced and monic.
std::vector<PolyVec> module_groebner(const std::vector<PolyVec>& gens,
                                     const MonomialOrder& order);
PolyVec module_normal_form(const PolyVec& v, const std::vector<PolyVec>& basis,
                           const MonomialOrder& order);

} // namespace adehilb

#endif
