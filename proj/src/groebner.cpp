#include <adehilb/groebner.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace adehilb {

std::vector<Polynomial> IdealPresentation::combined() const {
    std::vector<Polynomial> all;
    for (const auto& g : generators) all.push_back(g.with_vars(variables));
    for (const auto& r : relations) all.push_back(r.with_vars(variables));
    return all;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order, std::vector<Polynomial>* quotients) {
    if (quotients) quotients->assign(basis.size(), Polynomial(f.vars()));
    Polynomial h = f;
    Polynomial r(f.vars());
    while (!h.is_zero()) {
        auto [le, lc] = h.leading_term(order);
        bool divided = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].is_zero()) continue;
            auto [ge, gc] = basis[i].leading_term(order);
            if (!exp_divides(ge, le)) continue;
            Exponents m = exp_div(le, ge);
            Rational c = lc / gc;
            h -= basis[i].times_monomial(m, c);
            if (quotients) (*quotients)[i].add_term(m, c);
            divided = true;
            break;
        }
        if (!divided) {
            r.add_term(le, lc);
            Polynomial lt = Polynomial::monomial(f.vars(), le, lc);
            h -= lt;
        }
    }
    return r;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
    if (!f.vars().empty() && f.vars() != g.variables)
        return normal_form(f.with_vars(g.variables), g.elements, g.order);
    return normal_form(f, g.elements, g.order);
}

namespace {

struct Pair {
    std::size_t i, j;
    Exponents lcm;
};

// Gebauer-Moller style pair update.
void update_pairs(std::vector<Pair>& pairs, const std::vector<Polynomial>& g,
                  std::size_t new_idx, const MonomialOrder& order) {
    const Exponents lt_new = g[new_idx].leading_term(order).first;

    // eliminate old pairs whose lcm is a proper multiple through the new lead
    std::vector<Pair> kept;
    for (const auto& p : pairs) {
        if (exp_divides(lt_new, p.lcm)) {
            Exponents l_in = exp_lcm(g[p.i].leading_term(order).first, lt_new);
            Exponents l_jn = exp_lcm(g[p.j].leading_term(order).first, lt_new);
            if (l_in != p.lcm && l_jn != p.lcm) continue;
        }
        kept.push_back(p);
    }
    pairs = std::move(kept);

    // candidate new pairs, minimal lcms only
    std::vector<Pair> fresh;
    for (std::size_t k = 0; k < new_idx; ++k) {
        if (g[k].is_zero()) continue;
        fresh.push_back({k, new_idx, exp_lcm(g[k].leading_term(order).first, lt_new)});
    }
    std::sort(fresh.begin(), fresh.end(), [](const Pair& a, const Pair& b) {
        return total_degree(a.lcm) < total_degree(b.lcm);
    });
    std::vector<Pair> minimal;
    for (const auto& p : fresh) {
        bool redundant = false;
        for (const auto& q : minimal)
            if (exp_divides(q.lcm, p.lcm)) { redundant = true; break; }
        if (!redundant) minimal.push_back(p);
    }
    // product criterion
    for (const auto& p : minimal) {
        Exponents gcd = exp_gcd(g[p.i].leading_term(order).first, lt_new);
        if (total_degree(gcd) == 0) continue;
        pairs.push_back(p);
    }
}

} // namespace

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens,
                             const std::vector<std::string>& vars,
                             const MonomialOrder& order,
                             std::vector<std::vector<Polynomial>>* cofactors) {
    std::vector<Polynomial> g;
    std::vector<std::vector<Polynomial>> rows;  // g[k] = sum rows[k][j] * gens[j]
    const Polynomial zero{vars};

    auto push = [&](Polynomial p, std::vector<Polynomial> row) {
        Rational lc = p.leading_term(order).second;
        Rational inv = Rational(1) / lc;
        p = p.scaled(inv);
        for (auto& q : row) q = q.scaled(inv);
        g.push_back(std::move(p));
        rows.push_back(std::move(row));
    };

    std::vector<Pair> pairs;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        Polynomial p = gens[j].with_vars(vars);
        if (p.is_zero()) continue;
        std::vector<Polynomial> row(gens.size(), zero);
        row[j] = Polynomial::constant(vars, Rational(1));
        push(std::move(p), std::move(row));
        update_pairs(pairs, g, g.size() - 1, order);
    }

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(),
                                   [](const Pair& a, const Pair& b) {
                                       return total_degree(a.lcm) < total_degree(b.lcm);
                                   });
        Pair p = *it;
        pairs.erase(it);

        auto [ei, ci] = g[p.i].leading_term(order);
        auto [ej, cj] = g[p.j].leading_term(order);
        Exponents mi = exp_div(p.lcm, ei);
        Exponents mj = exp_div(p.lcm, ej);
        Polynomial s = g[p.i].times_monomial(mi, Rational(1) / ci) -
                       g[p.j].times_monomial(mj, Rational(1) / cj);
        std::vector<Polynomial> q;
        Polynomial h = normal_form(s, g, order, &q);
        if (h.is_zero()) continue;
        std::vector<Polynomial> row(gens.size(), zero);
        for (std::size_t j2 = 0; j2 < gens.size(); ++j2) {
            row[j2] = rows[p.i][j2].times_monomial(mi, Rational(1) / ci) -
                      rows[p.j][j2].times_monomial(mj, Rational(1) / cj);
            for (std::size_t k = 0; k < g.size(); ++k)
                row[j2] -= q[k] * rows[k][j2];
        }
        push(std::move(h), std::move(row));
        update_pairs(pairs, g, g.size() - 1, order);
    }

    // interreduce: drop elements with redundant leading terms
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g.size(); ++i) {
        Exponents lt = g[i].leading_term(order).first;
        bool redundant = false;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            Exponents lj = g[j].leading_term(order).first;
            if (exp_divides(lj, lt) && (lj != lt || j < i)) { redundant = true; break; }
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<Polynomial> g2;
    std::vector<std::vector<Polynomial>> rows2;
    for (std::size_t i : keep) {
        g2.push_back(g[i]);
        rows2.push_back(rows[i]);
    }

    // full tail reduction of each element modulo the others
    for (std::size_t i = 0; i < g2.size(); ++i) {
        std::vector<Polynomial> others;
        std::vector<std::size_t> others_idx;
        for (std::size_t j = 0; j < g2.size(); ++j)
            if (j != i) { others.push_back(g2[j]); others_idx.push_back(j); }
        std::vector<Polynomial> q;
        Polynomial red = normal_form(g2[i], others, order, &q);
        for (std::size_t k = 0; k < others.size(); ++k) {
            if (q[k].is_zero()) continue;
            for (std::size_t j2 = 0; j2 < rows2[i].size(); ++j2)
                rows2[i][j2] -= q[k] * rows2[others_idx[k]][j2];
        }
        Rational lc = red.leading_term(order).second;
        Rational inv = Rational(1) / lc;
        g2[i] = red.scaled(inv);
        for (auto& r : rows2[i]) r = r.scaled(inv);
    }

    // deterministic ordering: descending leading terms
    std::vector<std::size_t> idx(g2.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return order.compare(g2[a].leading_term(order).first,
                             g2[b].leading_term(order).first) > 0;
    });

    GroebnerBasis out;
    out.order = order;
    out.variables = vars;
    if (cofactors) cofactors->clear();
    for (std::size_t i : idx) {
        out.elements.push_back(g2[i]);
        if (cofactors) cofactors->push_back(rows2[i]);
    }
    return out;
}

GroebnerBasis groebner(const IdealPresentation& i, const MonomialOrder& order) {
    return groebner_basis(i.combined(), i.variables, order);
}

std::vector<Exponents> standard_monomials(const GroebnerBasis& g) {
    std::size_t nv = g.variables.size();
    std::vector<Exponents> leads;
    for (const auto& e : g.elements) leads.push_back(e.leading_term(g.order).first);

    // finiteness criterion: a pure power of each variable appears among leads
    std::vector<long> bound(nv, -1);
    for (const auto& l : leads) {
        int nz = -1;
        bool pure = true;
        for (std::size_t i = 0; i < nv; ++i) {
            if (l[i] > 0) {
                if (nz >= 0) { pure = false; break; }
                nz = static_cast<int>(i);
            }
        }
        if (pure && nz >= 0) {
            if (bound[nz] < 0 || l[nz] < bound[nz]) bound[nz] = l[nz];
        }
        if (pure && nz < 0) return {};  // constant in the basis: unit ideal
    }
    for (std::size_t i = 0; i < nv; ++i)
        if (bound[i] < 0) throw InfiniteColengthError();

    std::vector<Exponents> out;
    Exponents cur(nv, 0);
    // enumerate the finite box, filter by divisibility
    for (;;) {
        bool standard = true;
        for (const auto& l : leads)
            if (exp_divides(l, cur)) { standard = false; break; }
        if (standard) out.push_back(cur);
        std::size_t k = 0;
        while (k < nv) {
            if (++cur[k] < bound[k]) break;
            cur[k] = 0;
            ++k;
        }
        if (k == nv) break;
    }
    std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
        long da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

std::size_t colength(const IdealPresentation& i) {
    return standard_monomials(groebner(i, MonomialOrder::degrevlex())).size();
}

std::vector<std::vector<Polynomial>> syzygies(const IdealPresentation& ideal,
                                              const MonomialOrder& order) {
    const std::vector<Polynomial> f = ideal.combined();
    const auto& vars = ideal.variables;
    const Polynomial zero{vars};
    std::vector<std::vector<Polynomial>> a;
    GroebnerBasis gb = groebner_basis(f, vars, order, &a);
    const auto& g = gb.elements;
    const std::size_t s = f.size(), t = g.size();

    // B: f_j = sum B[j][k] g_k
    std::vector<std::vector<Polynomial>> b(s);
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<Polynomial> q;
        Polynomial r = normal_form(f[j], g, order, &q);
        if (!r.is_zero()) throw std::logic_error("syzygies: generator does not reduce to zero");
        b[j] = std::move(q);
    }

    std::vector<std::vector<Polynomial>> out;
    auto emit = [&](std::vector<Polynomial> v) {
        for (const auto& p : v)
            if (!p.is_zero()) {
                out.push_back(std::move(v));
                return;
            }
    };

    // Schreyer syzygies of G from every S-pair, pushed down to F through A
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = i + 1; j < t; ++j) {
            Exponents ei = g[i].leading_term(order).first;
            Exponents ej = g[j].leading_term(order).first;
            Exponents l = exp_lcm(ei, ej);
            Exponents mi = exp_div(l, ei), mj = exp_div(l, ej);
            Polynomial sp = g[i].times_monomial(mi, Rational(1)) -
                            g[j].times_monomial(mj, Rational(1));
            std::vector<Polynomial> q;
            Polynomial r = normal_form(sp, g, order, &q);
            if (!r.is_zero()) throw std::logic_error("syzygies: S-pair does not reduce to zero");
            // syzygy of G: mi e_i - mj e_j - q
            std::vector<Polynomial> sg(t, zero);
            sg[i] += Polynomial::monomial(vars, mi);
            sg[j] -= Polynomial::monomial(vars, mj);
            for (std::size_t k = 0; k < t; ++k) sg[k] -= q[k];
            // push down: syz_F = sg . A
            std::vector<Polynomial> v(s, zero);
            for (std::size_t c = 0; c < s; ++c)
                for (std::size_t k = 0; k < t; ++k) v[c] += sg[k] * a[k][c];
            emit(std::move(v));
        }
    }

    // rows of (I - B A)
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<Polynomial> v(s, zero);
        v[j] = Polynomial::constant(vars, Rational(1));
        for (std::size_t c = 0; c < s; ++c)
            for (std::size_t k = 0; k < t; ++k) v[c] -= b[j][k] * a[k][c];
        emit(std::move(v));
    }
    return out;
}

namespace {

// multiplicity of the ideal at the origin: colength(J + m^N) stabilized in N
std::size_t local_colength(const std::vector<Polynomial>& f,
                           const std::vector<std::string>& vars, std::size_t global) {
    const MonomialOrder ord = MonomialOrder::degrevlex();
    std::size_t prev = 0;
    bool have_prev = false;
    const std::size_t nv = vars.size();
    for (long N = 1; N <= static_cast<long>(global) + 4; ++N) {
        std::vector<Polynomial> gens = f;
        // all monomials of degree N
        std::function<void(std::size_t, long, Exponents&)> rec = [&](std::size_t i, long rem,
                                                                     Exponents& e) {
            if (i + 1 == nv) {
                e[i] = static_cast<int>(rem);
                gens.push_back(Polynomial::monomial(vars, e));
                return;
            }
            for (long v = 0; v <= rem; ++v) {
                e[i] = static_cast<int>(v);
                rec(i + 1, rem - v, e);
            }
        };
        Exponents e(nv, 0);
        rec(0, N, e);
        std::size_t c = standard_monomials(groebner_basis(gens, vars, ord)).size();
        if (have_prev && c == prev) return c;
        prev = c;
        have_prev = true;
    }
    return prev;
}

} // namespace

IdealPresentation leading_forms(const IdealPresentation& ideal) {
    const auto& vars = ideal.variables;
    std::vector<Polynomial> f = ideal.combined();
    for (const auto& p : f)
        if (!p.constant_term().is_zero())
            throw std::invalid_argument("leading_forms: generator has nonzero constant term");

    const MonomialOrder ord = MonomialOrder::degrevlex();
    GroebnerBasis gb = groebner_basis(f, vars, ord);
    std::size_t global = standard_monomials(gb).size();  // throws if infinite

    bool homogeneous = true;
    for (const auto& p : f) homogeneous = homogeneous && p.is_homogeneous();
    if (homogeneous) {
        // a homogeneous ideal is its own ideal of lowest forms
        std::vector<Polynomial> sorted = gb.elements;
        std::sort(sorted.begin(), sorted.end(),
                  [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
        std::vector<Polynomial> mingens;
        for (const auto& g : sorted) {
            if (mingens.empty()) {
                mingens.push_back(g);
                continue;
            }
            GroebnerBasis cur = groebner_basis(mingens, vars, ord);
            if (!normal_form(g, cur).is_zero()) mingens.push_back(g);
        }
        IdealPresentation out;
        out.variables = vars;
        out.generators = std::move(mingens);
        return out;
    }

    std::size_t d = local_colength(f, vars, global);

    const std::size_t nv = vars.size();
    long maxgen = 0;
    for (const auto& p : gb.elements) maxgen = std::max(maxgen, p.degree());

    // monomial index per degree
    auto monos_of_degree = [&](long deg) {
        std::vector<Exponents> out;
        Exponents cur(nv, 0);
        cur[0] = static_cast<int>(deg);
        // enumerate all exponent vectors of total degree deg
        std::vector<Exponents> stack;
        std::function<void(std::size_t, long, Exponents&)> rec =
            [&](std::size_t i, long rem, Exponents& e) {
                if (i + 1 == nv) {
                    e[i] = static_cast<int>(rem);
                    out.push_back(e);
                    return;
                }
                for (long v = 0; v <= rem; ++v) {
                    e[i] = static_cast<int>(v);
                    rec(i + 1, rem - v, e);
                }
            };
        Exponents e(nv, 0);
        rec(0, deg, e);
        return out;
    };

    for (long big = std::max<long>(maxgen, 1) + static_cast<long>(d);
         big <= 4 * static_cast<long>(d) + 4 * maxgen + 16; ++big) {
        // V = J cap S_{<= big} spanned by {m g : g in GB, deg m + deg g <= big}
        std::vector<Polynomial> span;
        for (const auto& g0 : gb.elements) {
            long room = big - g0.degree();
            for (long dm = 0; dm <= room; ++dm)
                for (const auto& m : monos_of_degree(dm))
                    span.push_back(g0.times_monomial(m, Rational(1)));
        }
        // coordinates: all monomials of degree <= big, ordered by increasing degree
        std::map<Exponents, std::size_t> col;
        std::vector<long> coldeg;
        for (long deg = 0; deg <= big; ++deg)
            for (const auto& m : monos_of_degree(deg)) {
                col[m] = coldeg.size();
                coldeg.push_back(deg);
            }
        // Gaussian elimination, eliminating LOWEST-degree coordinates first;
        // the leftover lowest parts of the reduced rows span the initial forms.
        std::vector<std::vector<Rational>> rows;
        for (const auto& p : span) {
            std::vector<Rational> r(coldeg.size());
            for (const auto& [e, c] : p.terms()) r[col.at(e)] = c;
            rows.push_back(std::move(r));
        }
        std::vector<long> pivot_of_col(coldeg.size(), -1);
        std::vector<std::vector<Rational>> reduced;
        for (auto& r : rows) {
            for (;;) {
                std::size_t lead = coldeg.size();
                for (std::size_t c = 0; c < coldeg.size(); ++c)
                    if (!r[c].is_zero()) { lead = c; break; }
                if (lead == coldeg.size()) break;
                if (pivot_of_col[lead] < 0) {
                    Rational inv = Rational(1) / r[lead];
                    for (auto& x : r) x *= inv;
                    pivot_of_col[lead] = static_cast<long>(reduced.size());
                    reduced.push_back(r);
                    break;
                }
                const auto& p0 = reduced[pivot_of_col[lead]];
                Rational fct = r[lead];
                for (std::size_t c = lead; c < coldeg.size(); ++c) r[c] -= fct * p0[c];
            }
        }
        // initial forms: lowest-degree component of each reduced row
        std::vector<Polynomial> forms;
        for (const auto& r : reduced) {
            long low = -1;
            for (std::size_t c = 0; c < coldeg.size(); ++c)
                if (!r[c].is_zero()) { low = coldeg[c]; break; }
            if (low < 0) continue;
            Polynomial p(vars);
            for (const auto& [m, ci] : col)
                if (coldeg[ci] == low && !r[ci].is_zero()) p.add_term(m, r[ci]);
            forms.push_back(std::move(p));
        }
        // certificate: graded colength of <forms> equals d
        GroebnerBasis lf = groebner_basis(forms, vars, ord);
        bool finite = true;
        std::size_t lfd = 0;
        try {
            lfd = standard_monomials(lf).size();
        } catch (const InfiniteColengthError&) {
            finite = false;
        }
        if (finite && lfd == d) {
            // minimal homogeneous generating set from the reduced basis
            std::vector<Polynomial> mingens;
            std::sort(forms.begin(), forms.end(), [](const Polynomial& x, const Polynomial& y) {
                return x.degree() < y.degree();
            });
            for (const auto& fm : forms) {
                if (mingens.empty()) {
                    mingens.push_back(fm);
                    continue;
                }
                GroebnerBasis cur = groebner_basis(mingens, vars, ord);
                if (!normal_form(fm, cur).is_zero()) mingens.push_back(fm);
            }
            IdealPresentation out;
            out.variables = vars;
            out.generators = std::move(mingens);
            return out;
        }
    }
    throw std::logic_error("leading_forms: degree guard exceeded without certification");
}

std::vector<long> hilbert_function(const IdealPresentation& ideal) {
    IdealPresentation lf = leading_forms(ideal);
    GroebnerBasis gb = groebner(lf, MonomialOrder::degrevlex());
    std::vector<Exponents> std_monos = standard_monomials(gb);
    long maxdeg = 0;
    for (const auto& m : std_monos) maxdeg = std::max(maxdeg, total_degree(m));
    std::vector<long> h(static_cast<std::size_t>(maxdeg) + 1, 0);
    for (const auto& m : std_monos) ++h[total_degree(m)];
    return h;
}

IdealPresentation weight_initial_ideal(const IdealPresentation& ideal,
                                       const std::vector<long>& weights) {
    for (long w : weights)
        if (w < 0) throw std::invalid_argument("weight_initial_ideal: negative weight");
    MonomialOrder ord = MonomialOrder::weighted(weights);
    GroebnerBasis gb = groebner(ideal, ord);
    IdealPresentation out;
    out.variables = ideal.variables;
    for (const auto& g : gb.elements) out.generators.push_back(g.top_weight_part(weights));
    return out;
}

bool ideal_contains(const GroebnerBasis& g, const Polynomial& f) {
    return normal_form(f, g).is_zero();
}

bool same_ideal(const IdealPresentation& a, const IdealPresentation& b) {
    GroebnerBasis ga = groebner(a, MonomialOrder::degrevlex());
    GroebnerBasis gb = groebner(b, MonomialOrder::degrevlex());
    for (const auto& f : a.combined())
        if (!ideal_contains(gb, f.with_vars(b.variables))) return false;
    for (const auto& f : b.combined())
        if (!ideal_contains(ga, f.with_vars(a.variables))) return false;
    return true;
}

// ---------------- module layer ----------------

bool vec_is_zero(const PolyVec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

namespace {

struct VecLead {
    std::size_t pos;
    Exponents e;
    Rational c;
};

VecLead vec_lead(const PolyVec& v, const MonomialOrder& order) {
    bool found = false;
    VecLead best;
    for (std::size_t p = 0; p < v.size(); ++p) {
        if (v[p].is_zero()) continue;
        auto [e, c] = v[p].leading_term(order);
        if (!found || order.compare(e, best.e) > 0 ||
            (order.compare(e, best.e) == 0 && p < best.pos)) {
            best = {p, e, c};
            found = true;
        }
    }
    if (!found) throw std::logic_error("vec_lead of zero vector");
    return best;
}

PolyVec vec_sub_scaled(PolyVec v, const PolyVec& w, const Exponents& m, const Rational& c) {
    for (std::size_t p = 0; p < v.size(); ++p) v[p] -= w[p].times_monomial(m, c);
    return v;
}

} // namespace

PolyVec module_normal_form(const PolyVec& v, const std::vector<PolyVec>& basis,
                           const MonomialOrder& order) {
    PolyVec h = v;
    PolyVec r(v.size(), Polynomial(v.empty() ? std::vector<std::string>{} : v[0].vars()));
    while (!vec_is_zero(h)) {
        VecLead l = vec_lead(h, order);
        bool divided = false;
        for (const auto& b : basis) {
            if (vec_is_zero(b)) continue;
            VecLead bl = vec_lead(b, order);
            if (bl.pos != l.pos || !exp_divides(bl.e, l.e)) continue;
            h = vec_sub_scaled(std::move(h), b, exp_div(l.e, bl.e), l.c / bl.c);
            divided = true;
            break;
        }
        if (!divided) {
            r[l.pos].add_term(l.e, l.c);
            Polynomial lt = Polynomial::monomial(h[l.pos].vars(), l.e, l.c);
            h[l.pos] -= lt;
        }
    }
    return r;
}

std::vector<PolyVec> module_groebner(const std::vector<PolyVec>& gens,
                                     const MonomialOrder& order) {
    std::vector<PolyVec> g;
    for (const auto& v : gens) {
        if (vec_is_zero(v)) continue;
        VecLead l = vec_lead(v, order);
        PolyVec w = v;
        Rational inv = Rational(1) / l.c;
        for (auto& p : w) p = p.scaled(inv);
        g.push_back(std::move(w));
    }

    struct MPair {
        std::size_t i, j;
        Exponents lcm;
    };
    std::vector<MPair> pairs;
    auto add_pairs = [&](std::size_t n) {
        VecLead ln = vec_lead(g[n], order);
        for (std::size_t k = 0; k < n; ++k) {
            VecLead lk = vec_lead(g[k], order);
            if (lk.pos != ln.pos) continue;
            pairs.push_back({k, n, exp_lcm(lk.e, ln.e)});
        }
    };
    for (std::size_t n = 0; n < g.size(); ++n) add_pairs(n);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(),
                                   [](const MPair& a, const MPair& b) {
                                       return total_degree(a.lcm) < total_degree(b.lcm);
                                   });
        MPair p = *it;
        pairs.erase(it);
        VecLead li = vec_lead(g[p.i], order);
        VecLead lj = vec_lead(g[p.j], order);
        PolyVec s = vec_sub_scaled(
            [&] {
                PolyVec t(g[p.i].size(), Polynomial(g[p.i][0].vars()));
                for (std::size_t q = 0; q < t.size(); ++q)
                    t[q] = g[p.i][q].times_monomial(exp_div(p.lcm, li.e), Rational(1));
                return t;
            }(),
            g[p.j], exp_div(p.lcm, lj.e), Rational(1));
        PolyVec h = module_normal_form(s, g, order);
        if (vec_is_zero(h)) continue;
        VecLead lh = vec_lead(h, order);
        Rational inv = Rational(1) / lh.c;
        for (auto& q : h) q = q.scaled(inv);
        g.push_back(std::move(h));
        add_pairs(g.size() - 1);
    }

    // minimalize + tail-reduce
    std::vector<PolyVec> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        VecLead li = vec_lead(g[i], order);
        bool redundant = false;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            VecLead lj = vec_lead(g[j], order);
            if (lj.pos == li.pos && exp_divides(lj.e, li.e) &&
                (lj.e != li.e || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(g[i]);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::vector<PolyVec> others;
        for (std::size_t j = 0; j < out.size(); ++j)
            if (j != i) others.push_back(out[j]);
        out[i] = module_normal_form(out[i], others, order);
        VecLead l = vec_lead(out[i], order);
        Rational inv = Rational(1) / l.c;
        for (auto& q : out[i]) q = q.scaled(inv);
    }
    return out;
}

} // namespace adehilb
