#ifndef ADEHILB_MATRIX_HPP
#define ADEHILB_MATRIX_HPP

#include <adehilb/rational.hpp>
#include <cstddef>
#include <vector>

namespace adehilb {

/// Dense matrix of exact rationals, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    Matrix transpose() const;
    bool is_skew_symmetric() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Rank over Q by fraction-free elimination.
std::size_t rank(const Matrix& m);

/// Basis of the right null space; size = cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

/// Exact determinant (Bareiss fraction-free on a denominator-cleared integer matrix).
/// Throws std::invalid_argument on non-square input.
Rational determinant(const Matrix& m);

/// Pfaffian of a skew-symmetric matrix of even size, with Pf([[0,1],[-1,0]]) = 1.
/// Throws std::invalid_argument on odd size or non-skew input.
Rational pfaffian(const Matrix& m);

} // namespace adehilb

#endif
