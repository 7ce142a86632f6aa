#ifndef ADEHILB_DYNKIN_HPP
#define ADEHILB_DYNKIN_HPP

#include <string>
#include <vector>

namespace adehilb {

enum class Family { A, D, E };

struct SingularityType {
    Family family;
    int n;

    std::string str() const;
    bool operator==(const SingularityType&) const = default;
};

SingularityType make_type(char family, int n);  // validates index ranges

/// Finite abelian group given by cyclic moduli; elements are coordinate
/// vectors mod the moduli. An empty moduli list is the trivial group.
struct ClassGroup {
    std::vector<long> moduli;

    std::vector<long> zero() const { return std::vector<long>(moduli.size(), 0); }
    std::vector<long> add(std::vector<long> a, const std::vector<long>& b) const;
    std::vector<long> neg(std::vector<long> a) const;
    std::vector<long> scale(long k, std::vector<long> a) const;
    bool is_zero(const std::vector<long>& a) const;
    std::string str() const;
};

/// Multiset of indecomposable reflexive modules plus a free part.
struct ModuleSum {
    SingularityType type;
    long free_rank = 0;
    std::vector<long> multiplicities;  // index 1..n stored at 0..n-1

    long total_rank() const;
    bool non_free_empty() const;
    std::string str() const;  // "free;a1,a2,...,an"
    bool operator==(const ModuleSum&) const = default;
};

ModuleSum parse_module_sum(const SingularityType& t, const std::string& text);

/// ADE diagram data. Labeling: A_n a path 1..n; D_n a path
/// 1..n-2 with both n-1 and n attached to n-2; E6 chain 1-2-3-5-6 with 4 at 3;
/// E7 chain 1-2-4-5-6-7 with 3 at 4; E8 chain 1-2-3-4-5 with 6 at 5 and tail
/// 5-7-8. Vertex 0 is the extended vertex (A_n closes the loop, with a double
/// edge for A_1; D_n attaches at 2; E6 at 4; E7/E8 at 1).
struct DynkinData {
    SingularityType type;
    int n;
    std::vector<std::vector<int>> adjacency;   // [1..n], sorted neighbor multisets
    std::vector<int> extended_neighbors;       // neighbors of vertex 0
    std::vector<int> ranks;                    // [1..n]
    std::vector<int> duals;                    // [1..n]
    ClassGroup class_group;
    std::vector<std::vector<long>> det_class;  // [1..n]

    /// Neighbors of i in the extended diagram: plain neighbors plus one copy
    /// of 0 per extended edge at i.
    std::vector<int> extended_adjacency(int i) const;
};

const DynkinData& diagram(const SingularityType& t);

int dual(const SingularityType& t, int i);

/// Middle term of the Auslander-Reiten sequence for M_i: the neighbor multiset
/// of i in the extended diagram; the extended vertex contributes free rank 1.
ModuleSum ar_middle(const SingularityType& t, int i);

int module_rank(const SingularityType& t, int i);

std::vector<long> det_class(const ModuleSum& s);

/// True iff det_class(s) is trivial in the local class group.
bool is_admissible(const ModuleSum& s);

} // namespace adehilb

#endif
