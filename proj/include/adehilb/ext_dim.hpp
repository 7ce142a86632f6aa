#ifndef ADEHILB_EXT_DIM_HPP
#define ADEHILB_EXT_DIM_HPP

#include <adehilb/dynkin.hpp>
#include <stdexcept>
#include <vector>

namespace adehilb {

class NonTerminatingError : public std::runtime_error {
public:
    NonTerminatingError() : std::runtime_error("tuple walk does not terminate") {}
};

class ConsistencyFailure : public std::runtime_error {
public:
    explicit ConsistencyFailure(const std::string& what) : std::runtime_error(what) {}
};

struct WalkConfig {
    bool use_extended = false;   // walk on the extended diagram
    bool count_start = true;     // the start tuple contributes to the tally
    bool drop_free = false;      // delete the extended vertex when it appears
};

struct WalkTrace {
    std::vector<std::vector<int>> tuples;  // sorted vertex multisets, start to empty
    long tally = 0;
};

/// Tuple-walk on the Dynkin diagram: T_0 = (i), T_{k+1} = N(T_k) - T_{k-1}
/// as multisets, stopping at the empty tuple; tallies occurrences of j.
WalkTrace ext_dim_walk(const SingularityType& t, int i, int j,
                       const WalkConfig& config = {});

/// Closed formula for type A: max{a, n+1-b} after sorting a <= b.
long ext_dim_formula_an(int n, int a, int b);

struct CertifiedExt {
    SingularityType type;
    int i, j;
    long dim;
};
const std::vector<CertifiedExt>& certified_ext_table();

/// dim Ext^1(M_i, M_j): type A by the closed formula, D/E by the walk;
/// any disagreement with the certified table raises ConsistencyFailure.
long ext_dim(const SingularityType& t, int i, int j);

/// Walk configurations that reproduce the whole certified table (the shipped
/// default must be among them).
std::vector<WalkConfig> calibrate_walk_configs();

} // namespace adehilb

#endif
