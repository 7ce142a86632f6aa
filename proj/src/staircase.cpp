#include <adehilb/staircase.hpp>

#include <adehilb/matrix.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace adehilb {

namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};

long degree_of(const LatticePoint& p) { return p.first + p.second; }

// linear extension used for canonical enumeration
bool canonical_less(const LatticePoint& a, const LatticePoint& b) {
    if (degree_of(a) != degree_of(b)) return degree_of(a) < degree_of(b);
    return a.first < b.first;
}

} // namespace

bool Lattice::member(const LatticePoint& p) const {
    if (p.first < 0 || p.second < 0) return false;
    for (long y = std::min(p.first, p.second); y >= 0; --y) {
        if ((p.first - y) % (n + 1) == 0 && (p.second - y) % (n + 1) == 0) return true;
    }
    return false;
}

bool Staircase::contains(const LatticePoint& p) const {
    return std::find(delta.begin(), delta.end(), p) != delta.end();
}

std::vector<LatticePoint> lattice_members(int n, long degree_bound) {
    Lattice lat{n};
    std::vector<LatticePoint> out;
    for (long a = 0; a <= degree_bound; ++a)
        for (long b = 0; a + b <= degree_bound; ++b)
            if (lat.member({a, b})) out.push_back({a, b});
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

bool is_staircase(int n, const std::vector<LatticePoint>& delta) {
    Lattice lat{n};
    std::set<LatticePoint> ds(delta.begin(), delta.end());
    for (const auto& p : delta) {
        if (!lat.member(p)) return false;
        for (const auto& g : lat.generators()) {
            LatticePoint q{p.first - g.first, p.second - g.second};
            if (q.first >= 0 && q.second >= 0 && lat.member(q) && !ds.count(q)) return false;
        }
    }
    return true;
}

std::vector<LatticePoint> corner_set(const Staircase& s) {
    Lattice lat{s.n};
    long bound = 0;
    for (const auto& p : s.delta) bound = std::max(bound, degree_of(p));
    bound += s.n + 2;
    std::vector<LatticePoint> out;
    for (const auto& alpha : lattice_members(s.n, bound)) {
        if (s.contains(alpha)) continue;
        bool corner = true;
        for (const auto& g : lat.generators()) {
            LatticePoint q{alpha.first - g.first, alpha.second - g.second};
            if (q.first >= 0 && q.second >= 0 && lat.member(q) && !s.contains(q)) {
                corner = false;
                break;
            }
        }
        if (corner) out.push_back(alpha);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<LatticePoint> border(const Staircase& s) {
    Lattice lat{s.n};
    std::set<LatticePoint> out;
    for (const auto& p : s.delta)
        for (const auto& g : lat.generators()) {
            LatticePoint q{p.first + g.first, p.second + g.second};
            if (!s.contains(q)) out.insert(q);
        }
    std::vector<LatticePoint> v(out.begin(), out.end());
    std::sort(v.begin(), v.end(), canonical_less);
    return v;
}

std::vector<Staircase> enumerate_staircases(int n, int d) {
    if (d < 1) throw std::invalid_argument("enumerate_staircases: d >= 1 required");
    std::vector<Staircase> out;
    Staircase cur{n, {{0, 0}}};

    // depth-first extension by addable points (= corners), adding points in
    // strictly increasing canonical order so each staircase appears once
    std::function<void(Staircase&)> rec = [&](Staircase& st) {
        if (static_cast<int>(st.size()) == d) {
            Staircase copy = st;
            std::sort(copy.delta.begin(), copy.delta.end(), canonical_less);
            out.push_back(copy);
            return;
        }
        const LatticePoint last = st.delta.back();
        for (const auto& c : corner_set(st)) {
            if (!canonical_less(last, c)) continue;
            st.delta.push_back(c);
            rec(st);
            st.delta.pop_back();
        }
    };
    if (d == 1) {
        out.push_back(cur);
    } else {
        rec(cur);
    }
    std::sort(out.begin(), out.end(), [](const Staircase& a, const Staircase& b) {
        return std::lexicographical_compare(a.delta.begin(), a.delta.end(), b.delta.begin(),
                                            b.delta.end(), canonical_less);
    });
    return out;
}

Polynomial lattice_monomial(int n, const LatticePoint& p) {
    long m = std::min(p.first, p.second);
    long a = p.first - m, b = p.second - m;
    Exponents e(3, 0);
    e[1] = static_cast<int>(m);
    if (a > 0) {
        if (a % (n + 1) != 0) throw std::invalid_argument("lattice_monomial: not a lattice point");
        e[0] = static_cast<int>(a / (n + 1));
    }
    if (b > 0) {
        if (b % (n + 1) != 0) throw std::invalid_argument("lattice_monomial: not a lattice point");
        e[2] = static_cast<int>(b / (n + 1));
    }
    return Polynomial::monomial(kXYZ, e);
}

IdealPresentation staircase_ideal(const Staircase& s) {
    IdealPresentation out;
    out.variables = kXYZ;
    out.relations = {parse_polynomial("x*z - y^" + std::to_string(s.n + 1), kXYZ)};
    for (const auto& c : corner_set(s)) out.generators.push_back(lattice_monomial(s.n, c));
    return out;
}

Polynomial discriminant(int n, const std::vector<LatticePoint>& points) {
    Lattice lat{n};
    const std::size_t d = points.size();
    std::set<LatticePoint> distinct(points.begin(), points.end());
    if (distinct.size() != d) throw std::invalid_argument("discriminant: duplicate points");
    for (const auto& p : points)
        if (!lat.member(p)) throw std::invalid_argument("discriminant: point outside the lattice");

    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= d; ++i) vars.push_back("u" + std::to_string(i));
    for (std::size_t i = 1; i <= d; ++i) vars.push_back("v" + std::to_string(i));

    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial acc(vars);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Exponents e(2 * d, 0);
        for (std::size_t i = 0; i < d; ++i) {
            e[i] = static_cast<int>(points[perm[i]].first);
            e[d + i] = static_cast<int>(points[perm[i]].second);
        }
        acc.add_term(e, Rational(inversions % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

namespace {

std::string chart_var_name(const LatticePoint& alpha, const LatticePoint& beta) {
    return "C" + std::to_string(alpha.first) + "a" + std::to_string(alpha.second) + "b" +
           std::to_string(beta.first) + "c" + std::to_string(beta.second);
}

} // namespace

ChartPresentation chart_relations(const Staircase& s) {
    if (s.n != 1)
        throw std::invalid_argument("chart_relations: implemented for the quadric cone (n = 1)");
    const Lattice lat{s.n};
    ChartPresentation chart;
    chart.delta = s;
    std::vector<LatticePoint> bord = border(s);
    for (const auto& alpha : bord)
        for (const auto& beta : s.delta) {
            chart.variables.push_back(chart_var_name(alpha, beta));
            chart.alphas.push_back(alpha);
            chart.betas.push_back(beta);
        }
    const auto& vars = chart.variables;
    std::set<LatticePoint> border_set(bord.begin(), bord.end());

    auto var_poly = [&](const LatticePoint& alpha, const LatticePoint& beta) {
        auto it = std::find(vars.begin(), vars.end(), chart_var_name(alpha, beta));
        return Polynomial::variable(vars, static_cast<std::size_t>(it - vars.begin()));
    };
    // coefficient of beta in the reduction of omega, for omega in Delta or border
    auto coefficient = [&](const LatticePoint& omega, const LatticePoint& beta) -> Polynomial {
        if (s.contains(omega))
            return Polynomial::constant(vars, Rational(omega == beta ? 1 : 0));
        return var_poly(omega, beta);
    };

    // routes for omega: each route gives, per beta, an expression for C^omega_beta
    auto routes = [&](const LatticePoint& omega) {
        std::vector<std::vector<Polynomial>> rs;
        if (border_set.count(omega)) {
            std::vector<Polynomial> direct;
            for (const auto& beta : s.delta) direct.push_back(var_poly(omega, beta));
            rs.push_back(std::move(direct));
        }
        for (const auto& g : lat.generators()) {
            LatticePoint alpha{omega.first - g.first, omega.second - g.second};
            if (alpha.first < 0 || alpha.second < 0 || !lat.member(alpha)) continue;
            if (!border_set.count(alpha)) continue;  // alpha in Delta gives the identity route
            std::vector<Polynomial> r;
            for (const auto& beta : s.delta) {
                Polynomial acc(vars);
                for (const auto& gamma : s.delta) {
                    LatticePoint gl{gamma.first + g.first, gamma.second + g.second};
                    acc += coefficient(alpha, gamma) * coefficient(gl, beta);
                }
                r.push_back(acc);
            }
            rs.push_back(std::move(r));
        }
        return rs;
    };

    // omega sweep: Delta + Lambda_0 + Lambda_0
    std::set<LatticePoint> omegas;
    for (const auto& p : s.delta)
        for (const auto& g1 : lat.generators())
            for (const auto& g2 : lat.generators())
                omegas.insert({p.first + g1.first + g2.first, p.second + g1.second + g2.second});

    std::set<std::string> seen;
    for (const auto& omega : omegas) {
        auto rs = routes(omega);
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = i + 1; j < rs.size(); ++j)
                for (std::size_t b = 0; b < s.delta.size(); ++b) {
                    Polynomial diff = rs[i][b] - rs[j][b];
                    if (diff.is_zero()) continue;
                    // normalize sign by the leading coefficient for deduplication
                    auto [le, lc] = diff.leading_term(MonomialOrder::degrevlex());
                    if (lc.sign() < 0) diff = -diff;
                    if (seen.insert(diff.str()).second) chart.relations.push_back(diff);
                }
    }
    return chart;
}

long chart_jacobian_corank_at_origin(const ChartPresentation& chart) {
    const std::size_t nv = chart.variables.size();
    Matrix jac(chart.relations.size(), nv);
    for (std::size_t r = 0; r < chart.relations.size(); ++r)
        for (const auto& [e, c] : chart.relations[r].terms()) {
            if (total_degree(e) != 1) continue;
            for (std::size_t v = 0; v < nv; ++v)
                if (e[v] == 1) jac(r, v) += c;
        }
    return static_cast<long>(nv) - static_cast<long>(rank(jac));
}

bool chart_membership(const GroebnerBasis& z, const Staircase& s) {
    std::vector<Exponents> std_monos = standard_monomials(z);
    if (std_monos.size() != s.size())
        throw std::invalid_argument("chart_membership: colength mismatch");
    const std::size_t d = std_monos.size();
    std::map<Exponents, std::size_t> midx;
    for (std::size_t i = 0; i < d; ++i) midx[std_monos[i]] = i;
    Matrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        Polynomial nf = normal_form(lattice_monomial(s.n, s.delta[j]).with_vars(z.variables), z);
        for (const auto& [e, c] : nf.terms()) m(midx.at(e), j) += c;
    }
    return rank(m) == d;
}

std::vector<int> staircase_syzygy_classes(const Staircase& s) {
    std::vector<LatticePoint> cs = corner_set(s);
    std::sort(cs.begin(), cs.end(),
              [](const LatticePoint& a, const LatticePoint& b) { return a.first > b.first; });
    std::vector<int> classes;
    for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
        long lu = std::max(cs[k].first, cs[k + 1].first);
        long lv = std::max(cs[k].second, cs[k + 1].second);
        long w = ((lu - lv) % (s.n + 1) + (s.n + 1)) % (s.n + 1);
        classes.push_back(static_cast<int>(w));
    }
    return classes;
}

} // namespace adehilb
