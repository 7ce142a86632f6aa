#ifndef ADEHILB_DEFORM_HPP
#define ADEHILB_DEFORM_HPP

#include <adehilb/dynkin.hpp>
#include <adehilb/groebner.hpp>
#include <adehilb/mcm.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace adehilb {

class NotAdmissibleError : public std::runtime_error {
public:
    NotAdmissibleError() : std::runtime_error("module sum has nontrivial determinant class") {}
};

class NoChainFoundError : public std::runtime_error {
public:
    explicit NoChainFoundError(const std::string& stuck)
        : std::runtime_error("no generalization chain found; stuck at " + stuck) {}
};

/// One directed generalization step: lhs (no free part) rewrites to rhs.
/// Every rule preserves total rank and det class; free rank strictly
/// increases unless the rule is a flagged exchange.
struct RewriteRule {
    ModuleSum lhs, rhs;
    std::string provenance;
    bool exchange = false;
};

const std::vector<RewriteRule>& rule_table(const SingularityType& t);

struct GeneralizationChain {
    std::vector<std::pair<ModuleSum, std::string>> steps;  // state after step, rule used
    ModuleSum start;
};

/// Breadth-first search for a chain ending at the pure free module of equal
/// total rank; deterministic (rules in table order, lexicographic states).
/// Flagged exchange rules are used at most once per chain.
GeneralizationChain generalization_chain(const ModuleSum& s);

/// The ideal of maximal minors of phi + t*I' where I' is the identity stacked
/// over a zero row; phi is the r x (r-1) presentation matrix of an ideal of
/// finite colength over the hypersurface ring.
IdealPresentation perturb_resolution(const PolyMatrix& phi,
                                     const std::vector<std::string>& variables,
                                     const std::vector<Polynomial>& relations,
                                     const Rational& t_value);

struct SmoothingSample {
    Rational t;
    std::size_t colength;
    bool origin_in_support;
};

std::vector<SmoothingSample> verify_smoothing(const PolyMatrix& phi,
                                              const std::vector<std::string>& variables,
                                              const std::vector<Polynomial>& relations,
                                              const std::vector<Rational>& samples);

/// Presentation matrix (columns = a basis of the free first syzygy) of an
/// ideal with free syzygy module; throws if the syzygy module is not free.
PolyMatrix free_syzygy_presentation(const IdealPresentation& i);

} // namespace adehilb

#endif
