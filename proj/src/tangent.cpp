#include <adehilb/tangent.hpp>

#include <adehilb/ext_dim.hpp>
#include <adehilb/matrix.hpp>
#include <adehilb/mcm.hpp>

#include <algorithm>
#include <map>

namespace adehilb {

IdealPresentation minimal_presentation(const IdealPresentation& i) {
    const auto& vars = i.variables;
    const MonomialOrder ord = MonomialOrder::degrevlex();
    std::vector<Polynomial> gens;
    for (const auto& g : i.generators) gens.push_back(g.with_vars(vars));

    // drop generators that lie in the ideal generated by the others (checked
    // globally, so ideals with support away from the origin stay intact)
    for (std::size_t cur = 0; cur < gens.size();) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != cur) others.push_back(gens[j]);
        for (const auto& r : i.relations) others.push_back(r.with_vars(vars));
        bool redundant = false;
        if (!others.empty()) {
            GroebnerBasis gb = groebner_basis(others, vars, ord);
            redundant = normal_form(gens[cur], gb).is_zero();
        }
        if (redundant) gens.erase(gens.begin() + static_cast<long>(cur));
        else ++cur;
    }
    IdealPresentation out;
    out.variables = vars;
    out.relations = i.relations;
    out.generators = std::move(gens);
    if (out.generators.empty())
        throw std::invalid_argument("minimal_presentation: ideal is zero in the quotient ring");
    return out;
}

long tangent_dimension(const IdealPresentation& ideal) {
    IdealPresentation min = minimal_presentation(ideal);
    GroebnerBasis gb = groebner(min, MonomialOrder::degrevlex());
    std::vector<Exponents> std_monos = standard_monomials(gb);  // throws if infinite
    const std::size_t d = std_monos.size();
    const std::size_t r = min.generators.size();
    std::map<Exponents, std::size_t> midx;
    for (std::size_t k = 0; k < d; ++k) midx[std_monos[k]] = k;

    auto mult_matrix = [&](const Polynomial& p) {
        Matrix mm(d, d);
        Polynomial q = normal_form(p.with_vars(min.variables), gb);
        for (std::size_t j = 0; j < d; ++j) {
            Polynomial nf = normal_form(q.times_monomial(std_monos[j], Rational(1)), gb);
            for (const auto& [e, c] : nf.terms()) mm(midx.at(e), j) += c;
        }
        return mm;
    };

    std::vector<std::vector<Polynomial>> syz = syzygies(min, MonomialOrder::degrevlex());
    const std::size_t rows = syz.size() * d;
    Matrix A(rows, r * d);
    for (std::size_t sidx = 0; sidx < syz.size(); ++sidx)
        for (std::size_t gi = 0; gi < r; ++gi) {
            const Polynomial& a = syz[sidx][gi];
            if (a.is_zero()) continue;
            Matrix mm = mult_matrix(a);
            for (std::size_t rr = 0; rr < d; ++rr)
                for (std::size_t cc = 0; cc < d; ++cc)
                    A(sidx * d + rr, gi * d + cc) += mm(rr, cc);
        }
    return static_cast<long>(r * d) - static_cast<long>(rank(A));
}

std::vector<std::size_t> nakayama_basis_indices(const IdealPresentation& min,
                                                const std::vector<PolyVec>& vectors) {
    const auto& vars = min.variables;
    const std::size_t r = min.generators.size();
    // U = m * span(vectors) + I0 * S^r
    std::vector<PolyVec> ugens;
    for (std::size_t v = 0; v < vars.size(); ++v) {
        Exponents e(vars.size(), 0);
        e[v] = 1;
        for (const auto& w : vectors) {
            PolyVec mw;
            for (const auto& p : w) mw.push_back(p.times_monomial(e, Rational(1)));
            ugens.push_back(std::move(mw));
        }
    }
    for (const auto& f : min.relations)
        for (std::size_t pos = 0; pos < r; ++pos) {
            PolyVec w(r, Polynomial(vars));
            w[pos] = f.with_vars(vars);
            ugens.push_back(std::move(w));
        }
    const MonomialOrder ord = MonomialOrder::degrevlex();
    std::vector<PolyVec> ugb = module_groebner(ugens, ord);

    std::vector<PolyVec> nfs;
    for (const auto& w : vectors) nfs.push_back(module_normal_form(w, ugb, ord));
    // flatten (position, exponent) support to columns, then rank-greedy
    std::map<std::pair<std::size_t, Exponents>, std::size_t> col;
    for (const auto& w : nfs)
        for (std::size_t p = 0; p < w.size(); ++p)
            for (const auto& [e, c] : w[p].terms()) {
                auto key = std::make_pair(p, e);
                if (!col.count(key)) col.emplace(key, col.size());
            }
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < nfs.size(); ++i) {
        std::vector<Rational> v(col.size());
        for (std::size_t p = 0; p < nfs[i].size(); ++p)
            for (const auto& [e, c] : nfs[i][p].terms()) v[col.at({p, e})] = c;
        for (const auto& rrow : rows) {
            std::size_t lead = 0;
            while (lead < rrow.size() && rrow[lead].is_zero()) ++lead;
            if (lead < rrow.size() && !v[lead].is_zero()) {
                Rational f = v[lead] / rrow[lead];
                for (std::size_t j = lead; j < rrow.size(); ++j) v[j] -= f * rrow[j];
            }
        }
        if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); })) {
            rows.push_back(v);
            std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
                std::size_t la = 0, lb = 0;
                while (la < a.size() && a[la].is_zero()) ++la;
                while (lb < b.size() && b[lb].is_zero()) ++lb;
                return la < lb;
            });
            picked.push_back(i);
        }
    }
    return picked;
}

std::size_t syzygy_mu(const IdealPresentation& ideal) {
    IdealPresentation min = minimal_presentation(ideal);
    (void)colength(min);  // InfiniteColength guard
    const std::size_t r = min.generators.size();
    std::vector<std::vector<Polynomial>> syz = syzygies(min, MonomialOrder::degrevlex());
    std::vector<PolyVec> proj;
    for (const auto& v : syz) {
        PolyVec w(v.begin(), v.begin() + r);
        if (!vec_is_zero(w)) proj.push_back(std::move(w));
    }
    return nakayama_basis_indices(min, proj).size();
}

bool syzygy_free(const IdealPresentation& ideal) {
    IdealPresentation min = minimal_presentation(ideal);
    (void)colength(min);
    const std::size_t r = min.generators.size();
    return syzygy_mu(min) == r - 1;
}

TangentReport smoothness_verdict(const IdealPresentation& ideal) {
    IdealPresentation min = minimal_presentation(ideal);
    TangentReport rep;
    rep.d = colength(min);
    rep.generators_used = min.generators.size();
    rep.tangent_dim = tangent_dimension(min);
    rep.syzygy_generators = syzygy_mu(min);
    rep.syzygy_free = rep.syzygy_generators == rep.generators_used - 1;

    const bool smooth_plane = min.relations.empty() && min.variables.size() == 2;
    const bool ade_surface = min.relations.size() == 1 && min.variables.size() == 3;
    if (smooth_plane || ade_surface) {
        const bool tangent_minimal = rep.tangent_dim == 2 * static_cast<long>(rep.d);
        if (tangent_minimal != rep.syzygy_free)
            throw ConsistencyFailure(
                "smoothness criteria disagree: tangent_dim = " + std::to_string(rep.tangent_dim) +
                ", 2d = " + std::to_string(2 * rep.d) + ", syzygy_free = " +
                (rep.syzygy_free ? "true" : "false"));
        rep.verdict = tangent_minimal ? TangentReport::Verdict::Smooth
                                      : TangentReport::Verdict::Singular;
    } else {
        rep.verdict = TangentReport::Verdict::Withheld;
    }
    return rep;
}

bool counting_formula_check(const IdealPresentation& ideal, const ModuleSum& decomposition) {
    if (decomposition.type.family != Family::A)
        throw std::invalid_argument("counting_formula_check: type A only");
    const int n = decomposition.type.n;
    IdealPresentation min = minimal_presentation(ideal);
    const long d = static_cast<long>(colength(min));
    const long r = static_cast<long>(min.generators.size());
    long decomp_rank = decomposition.free_rank;
    for (long a : decomposition.multiplicities) decomp_rank += a;
    if (decomp_rank != r - 1)
        throw std::invalid_argument("counting_formula_check: decomposition inconsistent with syzygy rank");

    const long s = tangent_dimension(min);
    GroebnerBasis gb = groebner(min, MonomialOrder::degrevlex());
    long acc = s;
    for (int i = 1; i <= n; ++i) {
        long ai = decomposition.multiplicities[i - 1];
        if (ai == 0) continue;
        auto [si, ti] = restriction_lengths(mf_an(n, i), gb);
        acc += ai * (si - ti - d);
    }
    return acc == 2 * d;
}

} // namespace adehilb
