#include <adehilb/deform.hpp>
#include <adehilb/tangent.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace adehilb {

namespace {

ModuleSum make_sum(const SingularityType& t, long free,
                   std::initializer_list<std::pair<int, long>> parts) {
    ModuleSum s;
    s.type = t;
    s.free_rank = free;
    s.multiplicities.assign(t.n, 0);
    for (const auto& [v, c] : parts) s.multiplicities[v - 1] += c;
    return s;
}

void check_rule(const RewriteRule& r) {
    if (r.lhs.free_rank != 0) throw std::logic_error("rule lhs has a free part: " + r.provenance);
    if (r.lhs.total_rank() != r.rhs.total_rank())
        throw std::logic_error("rule does not preserve rank: " + r.provenance);
    const DynkinData& d = diagram(r.lhs.type);
    if (!(det_class(r.lhs) == det_class(r.rhs)))
        throw std::logic_error("rule does not preserve det class: " + r.provenance);
    (void)d;
    if (!r.exchange && r.rhs.free_rank <= r.lhs.free_rank)
        throw std::logic_error("non-exchange rule does not raise free rank: " + r.provenance);
    if (r.exchange && r.rhs.free_rank != r.lhs.free_rank)
        throw std::logic_error("exchange rule changes free rank: " + r.provenance);
}

std::vector<RewriteRule> build_rules(const SingularityType& t) {
    const DynkinData& d = diagram(t);
    const int n = t.n;
    std::vector<RewriteRule> rules;
    auto add = [&](ModuleSum lhs, ModuleSum rhs, std::string prov, bool exch = false) {
        RewriteRule r{std::move(lhs), std::move(rhs), std::move(prov), exch};
        check_rule(r);
        for (const auto& q : rules)
            if (q.lhs == r.lhs && q.rhs == r.rhs) return;  // dedupe
        rules.push_back(std::move(r));
    };

    // presentation sequence 0 -> M_i* -> R^{2 rk} -> M_i -> 0
    for (int i = 1; i <= n; ++i) {
        int di = d.duals[i];
        ModuleSum lhs = i == di ? make_sum(t, 0, {{i, 2}}) : make_sum(t, 0, {{i, 1}, {di, 1}});
        add(lhs, make_sum(t, 2L * d.ranks[i], {}),
            "presentation of M" + std::to_string(i));
    }

    // Auslander-Reiten sequence 0 -> M_i -> E(M_i) -> M_i -> 0
    for (int i = 1; i <= n; ++i) {
        ModuleSum mid = ar_middle(t, i);
        ModuleSum lhs = make_sum(t, 0, {{i, 2}});
        if (mid == lhs) continue;
        add(lhs, mid, "AR sequence of M" + std::to_string(i), mid.free_rank == 0);
    }

    // a non-minimal middle of a self-extension deforms to the generic free
    // middle R^{2 rk}; applied to the AR middle of each self-dual vertex
    for (int i = 1; i <= n; ++i) {
        if (d.duals[i] != i) continue;
        ModuleSum mid = ar_middle(t, i);
        if (mid.free_rank != 0) continue;  // handled by the AR rule directly
        add(mid, make_sum(t, 2L * d.ranks[i], {}),
            "AR middle of self-dual M" + std::to_string(i) + " vs its presentation");
    }

    switch (t.family) {
    case Family::A: {
        // generic extension 0 -> M_a -> R + M_{a+b} -> M_b -> 0
        for (int a = 1; a <= n; ++a)
            for (int b = a; b <= n; ++b) {
                int s = (a + b) % (n + 1);
                ModuleSum lhs = a == b ? make_sum(t, 0, {{a, 2}})
                                       : make_sum(t, 0, {{a, 1}, {b, 1}});
                ModuleSum rhs = s == 0 ? make_sum(t, 2, {}) : make_sum(t, 1, {{s, 1}});
                add(lhs, rhs,
                    "generic extension M" + std::to_string(a) + ",M" + std::to_string(b));
            }
        break;
    }
    case Family::D: {
        for (int v = 2; v <= n - 2; v += 2)
            add(make_sum(t, 0, {{v, 1}}), make_sum(t, 2, {}),
                "even chain module M" + std::to_string(v) + " deforms to R^2");
        if (n % 2 == 0) {
            for (int i = 1; i <= n - 3; i += 2)
                for (int j = i + 2; j <= n - 3; j += 2)
                    add(make_sum(t, 0, {{i, 1}, {j, 1}}),
                        make_sum(t, d.ranks[i] + d.ranks[j], {}),
                        "odd pair M" + std::to_string(i) + ",M" + std::to_string(j));
            for (int i = 1; i <= n - 3; i += 2)
                add(make_sum(t, 0, {{i, 1}, {n - 1, 1}, {n, 1}}),
                    make_sum(t, d.ranks[i], {{n - 1, 2}}),
                    "fork triple M" + std::to_string(i) + ",M" + std::to_string(n - 1) +
                        ",M" + std::to_string(n));
        }
        break;
    }
    case Family::E: {
        if (n == 6) {
            add(make_sum(t, 0, {{1, 1}, {2, 1}}), make_sum(t, 0, {{3, 1}}),
                "generalization of M1+M2 to M3", true);
            add(make_sum(t, 0, {{3, 1}}), make_sum(t, 3, {}), "M3 deforms to R^3");
            add(make_sum(t, 0, {{4, 1}}), make_sum(t, 2, {}),
                "middle M4 of Ext(M6,M1) vs the free middle R^2");
        } else if (n == 7) {
            add(make_sum(t, 0, {{1, 1}}), make_sum(t, 2, {}), "rank-2 middle M1 of Ext(M7,M7)");
            add(make_sum(t, 0, {{6, 1}}), make_sum(t, 2, {}), "rank-2 middle M6 of Ext(M7,M7)");
            add(make_sum(t, 0, {{2, 1}}), make_sum(t, 3, {}), "M2 deforms to R^3");
            add(make_sum(t, 0, {{4, 1}}), make_sum(t, 4, {}), "middle M4 of Ext(M1,M1)");
            add(make_sum(t, 0, {{5, 1}, {7, 1}}), make_sum(t, 4, {}),
                "middle M5+M7 of Ext(M1,M1)");
        } else {
            for (int i : {1, 2, 3, 6, 7})
                add(make_sum(t, 0, {{i, 1}}), make_sum(t, d.ranks[i], {}),
                    "middle M" + std::to_string(i) + " (+free) of Ext(M8,M8)");
            add(make_sum(t, 0, {{5, 1}}), make_sum(t, 6, {}),
                "M5 deforms to R^6 via the sequences of M6");
            add(make_sum(t, 0, {{8, 1}}), make_sum(t, 0, {{1, 1}}),
                "paired ladder sequences specialize M1 to M8", true);
            add(make_sum(t, 0, {{2, 1}, {8, 1}}), make_sum(t, 0, {{4, 1}}),
                "sequence 0 -> M2 -> M4 -> M8 -> 0", true);
        }
        break;
    }
    }
    return rules;
}

} // namespace

const std::vector<RewriteRule>& rule_table(const SingularityType& t) {
    static std::map<std::pair<int, int>, std::vector<RewriteRule>> cache;
    auto key = std::make_pair(static_cast<int>(t.family), t.n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_rules(t)).first;
    return it->second;
}

GeneralizationChain generalization_chain(const ModuleSum& s) {
    if (!is_admissible(s)) throw NotAdmissibleError();
    const auto& rules = rule_table(s.type);

    struct State {
        std::vector<long> mult;
        long free;
        bool exchanged;
        bool operator<(const State& o) const {
            return std::tie(mult, free, exchanged) < std::tie(o.mult, o.free, o.exchanged);
        }
    };
    State start{s.multiplicities, s.free_rank, false};
    std::map<State, std::pair<State, std::size_t>> parent;  // state -> (prev, rule)
    std::deque<State> queue{start};
    std::set<State> seen{start};

    auto is_goal = [](const State& st) {
        return std::all_of(st.mult.begin(), st.mult.end(), [](long m) { return m == 0; });
    };

    State goal = start;
    bool found = is_goal(start);
    while (!queue.empty() && !found) {
        State cur = queue.front();
        queue.pop_front();
        for (std::size_t ri = 0; ri < rules.size() && !found; ++ri) {
            const RewriteRule& r = rules[ri];
            if (r.exchange && cur.exchanged) continue;
            bool applies = true;
            for (int v = 0; v < static_cast<int>(cur.mult.size()); ++v)
                if (r.lhs.multiplicities[v] > cur.mult[v]) { applies = false; break; }
            if (!applies) continue;
            State nxt = cur;
            for (int v = 0; v < static_cast<int>(cur.mult.size()); ++v)
                nxt.mult[v] += r.rhs.multiplicities[v] - r.lhs.multiplicities[v];
            nxt.free += r.rhs.free_rank - r.lhs.free_rank;
            nxt.exchanged = cur.exchanged || r.exchange;
            if (seen.count(nxt)) continue;
            seen.insert(nxt);
            parent.emplace(nxt, std::make_pair(cur, ri));
            if (is_goal(nxt)) {
                goal = nxt;
                found = true;
                break;
            }
            queue.push_back(nxt);
        }
    }
    if (!found) throw NoChainFoundError(s.str());

    GeneralizationChain chain;
    chain.start = s;
    std::vector<std::pair<ModuleSum, std::string>> rev;
    State cur = goal;
    while (!(cur.mult == start.mult && cur.free == start.free &&
             cur.exchanged == start.exchanged)) {
        auto it = parent.find(cur);
        ModuleSum ms;
        ms.type = s.type;
        ms.free_rank = cur.free;
        ms.multiplicities = cur.mult;
        rev.emplace_back(ms, rules[it->second.second].provenance);
        cur = it->second.first;
    }
    chain.steps.assign(rev.rbegin(), rev.rend());
    return chain;
}

namespace {

Polynomial poly_det(const PolyMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
    if (n == 1) return m[0][0];
    Polynomial acc(m[0][0].vars());
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            sub.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * poly_det(sub);
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

} // namespace

IdealPresentation perturb_resolution(const PolyMatrix& phi,
                                     const std::vector<std::string>& variables,
                                     const std::vector<Polynomial>& relations,
                                     const Rational& t_value) {
    const std::size_t r = phi.size();
    if (r < 2) throw std::invalid_argument("perturb_resolution: need an r x (r-1) matrix, r >= 2");
    for (const auto& row : phi)
        if (row.size() != r - 1)
            throw std::invalid_argument("perturb_resolution: matrix is not r x (r-1)");

    PolyMatrix tilde = phi;
    for (std::size_t i = 0; i + 1 < r; ++i)
        tilde[i][i] += Polynomial::constant(variables, t_value);

    IdealPresentation out;
    out.variables = variables;
    out.relations = relations;
    for (std::size_t drop = 0; drop < r; ++drop) {
        PolyMatrix sub;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == drop) continue;
            sub.push_back(tilde[i]);
        }
        Polynomial minor = poly_det(sub);
        if (drop % 2 == 1) minor = -minor;
        out.generators.push_back(minor);
    }
    return out;
}

std::vector<SmoothingSample> verify_smoothing(const PolyMatrix& phi,
                                              const std::vector<std::string>& variables,
                                              const std::vector<Polynomial>& relations,
                                              const std::vector<Rational>& samples) {
    std::vector<SmoothingSample> out;
    for (const Rational& t : samples) {
        IdealPresentation ideal = perturb_resolution(phi, variables, relations, t);
        GroebnerBasis gb = groebner(ideal, MonomialOrder::degrevlex());
        SmoothingSample s;
        s.t = t;
        s.colength = standard_monomials(gb).size();
        s.origin_in_support = true;
        for (const auto& g : gb.elements)
            if (!g.constant_term().is_zero()) s.origin_in_support = false;
        out.push_back(s);
    }
    return out;
}

PolyMatrix free_syzygy_presentation(const IdealPresentation& i) {
    TangentReport rep = smoothness_verdict(i);
    if (!rep.syzygy_free)
        throw std::invalid_argument("free_syzygy_presentation: first syzygy module is not free");
    IdealPresentation min = minimal_presentation(i);
    auto syz = syzygies(min, MonomialOrder::degrevlex());
    const std::size_t r = min.generators.size();
    // project to the generator coordinates and keep a Nakayama-independent subset
    std::vector<PolyVec> proj;
    for (const auto& v : syz) {
        PolyVec w(v.begin(), v.begin() + r);
        if (!vec_is_zero(w)) proj.push_back(std::move(w));
    }
    std::vector<std::size_t> picked = nakayama_basis_indices(min, proj);
    if (picked.size() != r - 1)
        throw std::logic_error("free_syzygy_presentation: unexpected syzygy generator count");
    PolyMatrix phi(r, std::vector<Polynomial>(r - 1, Polynomial(i.variables)));
    for (std::size_t c = 0; c < picked.size(); ++c)
        for (std::size_t row = 0; row < r; ++row) phi[row][c] = proj[picked[c]][row];
    return phi;
}

} // namespace adehilb
