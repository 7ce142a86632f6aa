#ifndef ADEHILB_EVIDENCE_HPP
#define ADEHILB_EVIDENCE_HPP

#include <adehilb/deform.hpp>
#include <adehilb/staircase.hpp>
#include <adehilb/tangent.hpp>
#include <optional>

namespace adehilb {

struct EvidenceEntry {
    std::vector<LatticePoint> delta;     // type A: the staircase
    std::vector<int> syzygy_classes;     // adjacent-corner decomposition (0 = free)
    ModuleSum decomposition;
    bool admissible = false;
    bool decomposition_consistent = false;  // mu cross-check against the Groebner side
    bool chain_found = false;
    std::size_t chain_length = 0;
    std::optional<TangentReport> report;    // absent for the D/E sweep
};

struct EvidenceReport {
    SingularityType type;
    int d = 0;
    std::vector<EvidenceEntry> entries;
    std::size_t admissible_count = 0;
    std::size_t chain_count = 0;
    std::size_t smooth_count = 0;
    std::size_t singular_count = 0;
};

/// Type A: every torus-fixed ideal of colength d (staircase enumeration),
/// with syzygy decomposition, admissibility, generalization chain, and
/// tangent verdict. Types D/E: the admissible module-sum sweep up to total
/// rank d with chain coverage (no staircase model exists for D/E).
EvidenceReport run_evidence(const SingularityType& t, int d);

} // namespace adehilb

#endif
