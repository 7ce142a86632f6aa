#include <adehilb/evidence.hpp>

#include <functional>

namespace adehilb {

namespace {

ModuleSum sum_from_classes(const SingularityType& t, const std::vector<int>& classes) {
    ModuleSum s;
    s.type = t;
    s.multiplicities.assign(t.n, 0);
    for (int c : classes) {
        if (c == 0) ++s.free_rank;
        else ++s.multiplicities[c - 1];
    }
    return s;
}

EvidenceEntry entry_for_staircase(const SingularityType& t, const Staircase& st) {
    EvidenceEntry e;
    e.delta = st.delta;
    e.syzygy_classes = staircase_syzygy_classes(st);
    e.decomposition = sum_from_classes(t, e.syzygy_classes);
    e.admissible = is_admissible(e.decomposition);

    IdealPresentation ideal = staircase_ideal(st);
    TangentReport rep = smoothness_verdict(ideal);
    e.report = rep;

    // cross-check: mu(Syz) = #free + 2 * #nonfree, rank = r - 1
    std::size_t nonfree = 0;
    for (int c : e.syzygy_classes)
        if (c != 0) ++nonfree;
    std::size_t free_cnt = e.syzygy_classes.size() - nonfree;
    e.decomposition_consistent =
        rep.syzygy_generators == free_cnt + 2 * nonfree &&
        e.syzygy_classes.size() == rep.generators_used - 1;

    try {
        GeneralizationChain chain = generalization_chain(e.decomposition);
        e.chain_found = true;
        e.chain_length = chain.steps.size();
    } catch (const NoChainFoundError&) {
        e.chain_found = false;
    }
    return e;
}

} // namespace

EvidenceReport run_evidence(const SingularityType& t, int d) {
    EvidenceReport out;
    out.type = t;
    out.d = d;

    if (t.family == Family::A) {
        for (const Staircase& st : enumerate_staircases(t.n, d))
            out.entries.push_back(entry_for_staircase(t, st));
    } else {
        // admissible module sums of total rank <= d, no free part
        const DynkinData& dd = diagram(t);
        std::vector<long> mult(t.n, 0);
        std::function<void(int, long)> rec = [&](int v, long rank_left) {
            if (v > t.n) {
                bool nonzero = false;
                for (long m : mult) nonzero = nonzero || m > 0;
                if (!nonzero) return;
                EvidenceEntry e;
                e.decomposition.type = t;
                e.decomposition.free_rank = 0;
                e.decomposition.multiplicities = mult;
                e.admissible = is_admissible(e.decomposition);
                if (!e.admissible) return;
                e.decomposition_consistent = true;
                try {
                    GeneralizationChain chain = generalization_chain(e.decomposition);
                    e.chain_found = true;
                    e.chain_length = chain.steps.size();
                } catch (const NoChainFoundError&) {
                    e.chain_found = false;
                }
                out.entries.push_back(std::move(e));
                return;
            }
            for (long m = 0; m * dd.ranks[v] <= rank_left; ++m) {
                mult[v - 1] = m;
                rec(v + 1, rank_left - m * dd.ranks[v]);
            }
            mult[v - 1] = 0;
        };
        rec(1, d);
    }

    for (const auto& e : out.entries) {
        if (e.admissible) ++out.admissible_count;
        if (e.chain_found) ++out.chain_count;
        if (e.report) {
            if (e.report->verdict == TangentReport::Verdict::Smooth) ++out.smooth_count;
            if (e.report->verdict == TangentReport::Verdict::Singular) ++out.singular_count;
        }
    }
    return out;
}

} // namespace adehilb
