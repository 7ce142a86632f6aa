#include <adehilb/matrix.hpp>

#include <stdexcept>

namespace adehilb {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j).is_zero()) continue;
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    return c;
}

namespace {

// Row echelon over Q; returns pivot columns. `m` is reduced in place to RREF.
std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
        Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(const Matrix& m) {
    Matrix w = m;
    return rref(w).size();
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
    Matrix w = m;
    std::vector<std::size_t> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    // Clear denominators row by row, then run integer Bareiss.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpq_class scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, m(i, j).denominator());
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class q = m(i, j).raw() * l;
            a[i][j] = q.get_num();
        }
    }

    mpz_class prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
        prev = a[k][k];
    }
    mpq_class det(a[n - 1][n - 1] * sign);
    det /= scale;
    return Rational(det);
}

Rational pfaffian(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("pfaffian: non-square matrix");
    if (m.rows() % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
    if (!m.is_skew_symmetric()) throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");

    std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    Matrix a = m;
    Rational result(1);

    for (std::size_t k = 0; k + 1 < n; k += 2) {
        // pivot a(k, k+1); swap row/column pairs to make it nonzero
        std::size_t p = k + 1;
        while (p < n && a(k, p).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k + 1, j), a(p, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k + 1), a(i, p));
            result = -result;
        }
        Rational piv = a(k, k + 1);
        result *= piv;
        // eliminate rows/cols k, k+1 from the trailing block, keeping it skew
        for (std::size_t i = k + 2; i < n; ++i) {
            Rational ti = a(k, i) / piv;
            for (std::size_t j = k + 2; j < n; ++j) {
                Rational tj = a(k, j) / piv;
                // Schur complement of the 2x2 pivot block, stays skew:
                // A'[i][j] = A[i][j] - (A[k][i]A[k+1][j] - A[k][j]A[k+1][i]) / piv
                a(i, j) -= ti * a(k + 1, j) - tj * a(k + 1, i);
            }
        }
    }
    return result;
}

} // namespace adehilb
