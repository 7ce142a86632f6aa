#include <adehilb/mcm.hpp>

#include <cstdlib>
#include <map>

namespace adehilb {

namespace {
const std::vector<std::string> kXYZ = {"x", "y", "z"};

Polynomial P(const std::string& s) { return parse_polynomial(s, kXYZ); }
}

PolyMatrix poly_matrix_mul(const PolyMatrix& a, const PolyMatrix& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    PolyMatrix c(n, std::vector<Polynomial>(m, Polynomial(a[0][0].vars())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

bool poly_matrix_equal(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    }
    return true;
}

bool MatrixFactorization::verify() const {
    std::size_t n = size();
    PolyMatrix fi(n, std::vector<Polynomial>(n, Polynomial(f.vars())));
    for (std::size_t i = 0; i < n; ++i) fi[i][i] = f;
    return poly_matrix_equal(poly_matrix_mul(phi, psi), fi) &&
           poly_matrix_equal(poly_matrix_mul(psi, phi), fi);
}

MatrixFactorization mf_an(int n, int i) {
    if (n < 1 || i < 1 || i > n) throw std::out_of_range("mf_an: index out of range");
    MatrixFactorization m;
    m.f = P("x*z - y^" + std::to_string(n + 1));
    const std::string yi = "y^" + std::to_string(i);
    const std::string yni = "y^" + std::to_string(n + 1 - i);
    m.phi = {{P("x"), -P(yi)}, {-P(yni), P("z")}};
    m.psi = {{P("z"), P(yi)}, {P(yni), P("x")}};
    return m;
}

PolyMatrix e8_phi8() {
    const Polynomial O = P("0");
    return {
        {O, O, P("-x^2"), P("-y^3")},
        {O, O, P("-y^2"), P("x")},
        {P("x"), P("y^3"), O, O},
        {P("y^2"), P("-x^2"), O, O},
    };
}

PolyMatrix e8_phi4() {
    const Polynomial O = P("0");
    return {
        {O, O, O, O, O, P("-x^2"), P("-y^3"), O, O, O},
        {O, O, O, O, O, P("-y^2"), P("x"), O, O, O},
        {O, O, O, O, O, P("-y^3"), O, P("-x^2"), P("x*y^2"), P("-y^4")},
        {O, O, O, O, O, P("x*y"), O, P("-y^3"), P("-x^2"), P("x*y^2")},
        {O, O, O, O, O, O, P("y^2"), P("x*y"), P("-y^3"), P("-x^2")},
        {P("x"), P("y^3"), O, O, O, O, O, O, O, O},
        {P("y^2"), P("-x^2"), O, O, O, O, O, O, O, O},
        {O, O, P("x"), P("y^2"), O, O, O, O, O, O},
        {P("y"), O, O, P("x"), P("y^2"), O, O, O, O, O},
        {O, P("-y^2"), P("y"), O, P("x"), O, O, O, O, O},
    };
}

namespace {

MatrixFactorization mf_from_block(const PolyMatrix& blk) {
    std::size_t n = blk.size();
    MatrixFactorization m;
    m.f = P("z^2 + x^3 + y^5");
    Polynomial z = P("z");
    m.phi.assign(n, std::vector<Polynomial>(n, Polynomial(kXYZ)));
    m.psi.assign(n, std::vector<Polynomial>(n, Polynomial(kXYZ)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m.phi[i][j] = -blk[i][j];
            m.psi[i][j] = blk[i][j];
            if (i == j) {
                m.phi[i][j] += z;
                m.psi[i][j] += z;
            }
        }
    return m;
}

} // namespace

MatrixFactorization mf_e8_m8() { return mf_from_block(e8_phi8()); }
MatrixFactorization mf_e8_m4() { return mf_from_block(e8_phi4()); }

std::vector<PolyMatrix> periodic_resolution(const MatrixFactorization& m, std::size_t length) {
    if (!m.verify()) throw std::invalid_argument("periodic_resolution: unverified factorization");
    std::vector<PolyMatrix> out;
    for (std::size_t k = 0; k < length; ++k) out.push_back(k % 2 == 0 ? m.phi : m.psi);
    return out;
}

namespace {

// monomials of total degree <= d in nv variables, indexed deterministically
std::vector<Exponents> monomials_up_to(std::size_t nv, int d) {
    std::vector<Exponents> out;
    Exponents e(nv, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (i + 1 == nv) {
            for (int v = 0; v <= rem; ++v) {
                e[i] = v;
                out.push_back(e);
            }
            e[i] = 0;
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            e[i] = v;
            rec(i + 1, rem - v);
        }
        e[i] = 0;
    };
    rec(0, d);
    return out;
}

long matrix_max_degree(const PolyMatrix& m) {
    long d = 0;
    for (const auto& row : m)
        for (const auto& p : row) d = std::max(d, p.degree());
    return d;
}

// Work in the reduced monomial basis of S/(f): monomials of degree <= d not
// divisible by the leading term of f.
struct ModfBox {
    GroebnerBasis gb;  // of {f}
    std::vector<Exponents> monos;
    std::map<Exponents, std::size_t> index;

    ModfBox(const Polynomial& f, std::size_t nv, int d) {
        gb = groebner_basis({f}, f.vars(), MonomialOrder::degrevlex());
        Exponents lt = gb.elements[0].leading_term(gb.order).first;
        for (const auto& e : monomials_up_to(nv, d))
            if (!exp_divides(lt, e)) {
                index[e] = monos.size();
                monos.push_back(e);
            }
    }
};

// dim of { H in Mat_{m2 x m1}(S/(f), deg <= D) : psi2 H psi1 = 0 mod f }
// modulo { phi2 K + L phi1 mod f : K, L deg <= D } intersected with deg <= D.
// (H psi1 = phi2 G for some G  <=>  psi2 H psi1 = f G = 0 mod f.)
long ext1_at_bound(const MatrixFactorization& m1, const MatrixFactorization& m2, int D) {
    const std::size_t n1 = m1.size(), n2 = m2.size();
    const std::size_t nv = m1.f.vars().size();
    const int dpsi1 = static_cast<int>(matrix_max_degree(m1.psi));
    const int dpsi2 = static_cast<int>(matrix_max_degree(m2.psi));
    const int dphi1 = static_cast<int>(matrix_max_degree(m1.phi));
    const int dphi2 = static_cast<int>(matrix_max_degree(m2.phi));

    const ModfBox boxH(m1.f, nv, D);
    const ModfBox boxQ(m1.f, nv, D + dpsi1 + dpsi2);
    const ModfBox boxB(m1.f, nv, D + std::max(dphi1, dphi2));
    const std::size_t NH = n2 * n1 * boxH.monos.size();

    auto hvar = [&](std::size_t r, std::size_t c, std::size_t m) {
        return (r * n1 + c) * boxH.monos.size() + m;
    };

    // psi2 E_{rc} psi1 = (column r of psi2) outer (row c of psi1), once per (r,c)
    std::vector<std::vector<PolyMatrix>> outer(n2, std::vector<PolyMatrix>(n1));
    for (std::size_t r = 0; r < n2; ++r)
        for (std::size_t c = 0; c < n1; ++c) {
            PolyMatrix w(n2, std::vector<Polynomial>(n1, Polynomial(m1.f.vars())));
            for (std::size_t a = 0; a < n2; ++a)
                for (std::size_t b = 0; b < n1; ++b) w[a][b] = m2.psi[a][r] * m1.psi[c][b];
            outer[r][c] = std::move(w);
        }

    // cocycle system rows: coefficients of NF(psi2 H psi1) over boxQ
    Matrix A(n2 * n1 * boxQ.monos.size(), NH);
    for (std::size_t r = 0; r < n2; ++r)
        for (std::size_t c = 0; c < n1; ++c)
            for (std::size_t m = 0; m < boxH.monos.size(); ++m) {
                const Exponents& me = boxH.monos[m];
                for (std::size_t a = 0; a < n2; ++a)
                    for (std::size_t b = 0; b < n1; ++b) {
                        if (outer[r][c][a][b].is_zero()) continue;
                        Polynomial p = normal_form(
                            outer[r][c][a][b].times_monomial(me, Rational(1)), boxQ.gb);
                        for (const auto& [e, coef] : p.terms())
                            A((a * n1 + b) * boxQ.monos.size() + boxQ.index.at(e),
                              hvar(r, c, m)) += coef;
                    }
            }
    const std::size_t dimZ = NH - rank(A);

    // coboundary generators: NF(phi2 E_{kc} m) and NF(E_{rk} m phi1), deg <= D box
    // plus overflow rows; intersect with the deg <= D part.
    std::vector<std::vector<Rational>> gens;  // coordinates over (cell, boxB mono)
    const std::size_t cellsz = boxB.monos.size();
    auto coord = [&](std::size_t r, std::size_t c, std::size_t m) {
        return (r * n1 + c) * cellsz + m;
    };
    for (std::size_t k = 0; k < n2; ++k)
        for (std::size_t c = 0; c < n1; ++c)
            for (std::size_t m = 0; m < boxH.monos.size(); ++m) {
                std::vector<Rational> v(n2 * n1 * cellsz);
                for (std::size_t r = 0; r < n2; ++r) {
                    if (m2.phi[r][k].is_zero()) continue;
                    Polynomial p = normal_form(
                        m2.phi[r][k].times_monomial(boxH.monos[m], Rational(1)), boxB.gb);
                    for (const auto& [e, coef] : p.terms()) v[coord(r, c, boxB.index.at(e))] += coef;
                }
                gens.push_back(std::move(v));
            }
    for (std::size_t r = 0; r < n2; ++r)
        for (std::size_t k = 0; k < n1; ++k)
            for (std::size_t m = 0; m < boxH.monos.size(); ++m) {
                std::vector<Rational> v(n2 * n1 * cellsz);
                for (std::size_t c = 0; c < n1; ++c) {
                    if (m1.phi[k][c].is_zero()) continue;
                    Polynomial p = normal_form(
                        m1.phi[k][c].times_monomial(boxH.monos[m], Rational(1)), boxB.gb);
                    for (const auto& [e, coef] : p.terms()) v[coord(r, c, boxB.index.at(e))] += coef;
                }
                gens.push_back(std::move(v));
            }

    // order coordinates: high-degree first so that eliminating them first lets
    // us read off the dimension of the span intersected with degree <= D
    std::vector<std::size_t> high, low;
    for (std::size_t r = 0; r < n2; ++r)
        for (std::size_t c = 0; c < n1; ++c)
            for (std::size_t m = 0; m < cellsz; ++m) {
                std::size_t cc = coord(r, c, m);
                if (total_degree(boxB.monos[m]) <= D) low.push_back(cc);
                else high.push_back(cc);
            }
    Matrix B(gens.size(), high.size() + low.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::size_t j = 0;
        for (std::size_t cc : high) B(i, j++) = gens[i][cc];
        for (std::size_t cc : low) B(i, j++) = gens[i][cc];
    }
    // row echelon, pivoting left-to-right: rows whose pivots land in the low
    // block span exactly the degree-<= D slice of the coboundary space
    Matrix W = B;
    std::size_t dimB_low = 0;
    {
        std::size_t row = 0;
        for (std::size_t col = 0; col < W.cols() && row < W.rows(); ++col) {
            std::size_t p = row;
            while (p < W.rows() && W(p, col).is_zero()) ++p;
            if (p == W.rows()) continue;
            if (p != row)
                for (std::size_t j = 0; j < W.cols(); ++j) std::swap(W(row, j), W(p, j));
            for (std::size_t i = row + 1; i < W.rows(); ++i) {
                if (W(i, col).is_zero()) continue;
                Rational f0 = W(i, col) / W(row, col);
                for (std::size_t j = col; j < W.cols(); ++j) W(i, j) -= f0 * W(row, j);
            }
            if (col >= high.size()) ++dimB_low;
            ++row;
        }
    }
    return static_cast<long>(dimZ) - static_cast<long>(dimB_low);
}

int degree_ceiling_from_env(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ADEHILB_DEGREE_CEILING")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 20;
}

} // namespace

Ext1Result ext1_oracle_detail(const MatrixFactorization& m1, const MatrixFactorization& m2,
                              int degree_ceiling) {
    if (!(m1.f == m2.f))
        throw std::invalid_argument("ext1_oracle: factorizations of different hypersurfaces");
    const int ceiling = degree_ceiling_from_env(degree_ceiling);
    long prev = -1, prev2 = -2;
    for (int D = 1; D <= ceiling; ++D) {
        long cur = ext1_at_bound(m1, m2, D);
        if (cur == prev && prev == prev2) return {cur, D};
        prev2 = prev;
        prev = cur;
    }
    throw NoStabilizationError("ext1_oracle: no stabilization by degree bound " +
                               std::to_string(ceiling));
}

long ext1_oracle(const MatrixFactorization& m1, const MatrixFactorization& m2,
                 int degree_ceiling) {
    return ext1_oracle_detail(m1, m2, degree_ceiling).dim;
}

std::pair<long, long> restriction_lengths(const MatrixFactorization& m, const GroebnerBasis& z,
                                          Orientation orient) {
    if (!normal_form(m.f.with_vars(z.variables), z).is_zero())
        throw std::invalid_argument("restriction_lengths: hypersurface not contained in z");
    std::vector<Exponents> std_monos = standard_monomials(z);  // throws if infinite
    const std::size_t d = std_monos.size();
    std::map<Exponents, std::size_t> midx;
    for (std::size_t i = 0; i < d; ++i) midx[std_monos[i]] = i;

    auto mult_matrix = [&](const Polynomial& p) {
        Matrix mm(d, d);
        Polynomial q = p.with_vars(z.variables);
        for (std::size_t j = 0; j < d; ++j) {
            Polynomial prod = q.times_monomial(std_monos[j], Rational(1));
            Polynomial nf = normal_form(prod, z);
            for (const auto& [e, c] : nf.terms()) mm(midx.at(e), j) += c;
        }
        return mm;
    };

    const PolyMatrix& first = orient == Orientation::PsiFirst ? m.psi : m.phi;
    const PolyMatrix& second = orient == Orientation::PsiFirst ? m.phi : m.psi;
    const std::size_t k = m.size();
    Matrix d0(k * d, k * d), d1(k * d, k * d);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Matrix b0 = mult_matrix(first[i][j]);
            Matrix b1 = mult_matrix(second[i][j]);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) {
                    d0(i * d + r, j * d + c) = b0(r, c);
                    d1(i * d + r, j * d + c) = b1(r, c);
                }
        }
    const long r0 = static_cast<long>(rank(d0));
    const long r1 = static_cast<long>(rank(d1));
    const long s = static_cast<long>(k * d) - r0;
    const long t = (static_cast<long>(k * d) - r1) - r0;
    return {s, t};
}

} // namespace adehilb
