#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "centorb/rational.hpp"

namespace centorb {

/// Dense row-major matrix over the rationals. Column vectors are n x 1
/// matrices; there is no separate vector type.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix column(std::vector<Rational> entries);
    /// Columns placed side by side; all must be n x 1 with the same n.
    static Matrix from_columns(std::span<const Matrix> columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    std::string shape() const;

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    /// Entry i of a column vector.
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }

    std::span<const Rational> entries() const { return entries_; }
    Matrix col(std::size_t c) const;
    bool is_zero() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);

inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

/// k-th power of a square matrix; k = 0 gives the identity.
Matrix mat_pow(const Matrix& m, unsigned k);

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination, pivoting on the first nonzero entry of each column.
Echelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right kernel, one vector per free column in ascending order;
/// each has a 1 at its free column and zeros at the other free columns.
std::vector<Matrix> kernel_basis(const Matrix& m);

/// Inverse of a square matrix; throws DimensionError if singular or non-square.
Matrix inverse(const Matrix& m);

/// Solves a x = b for a square invertible a.
Matrix solve(const Matrix& a, const Matrix& b);

/// Rank of the matrix whose columns are the given vectors.
std::size_t span_dimension(std::span<const Matrix> vectors, std::size_t rows);

/// Block-diagonal Jordan matrix helper used by tests and the Jordan module:
/// lower subdiagonal ones inside each block.
Matrix jordan_block(const Rational& eigenvalue, std::size_t size);
Matrix direct_sum(std::span<const Matrix> blocks);

std::string to_string(const Matrix& m);

}  // namespace centorb
