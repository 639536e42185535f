#include "centorb/matrix.hpp"

#include <sstream>
#include <utility>

#include "centorb/error.hpp"

namespace centorb {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols)
        throw DimensionError("matrix " + shape() + " given " + std::to_string(entries_.size()) +
                             " entries");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionError("ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::column(std::vector<Rational> entries) {
    const std::size_t n = entries.size();
    return Matrix(n, 1, std::move(entries));
}

Matrix Matrix::from_columns(std::span<const Matrix> columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].rows() != rows || columns[c].cols() != 1)
            throw DimensionError("column " + std::to_string(c) + " has shape " + columns[c].shape() +
                                 ", expected " + std::to_string(rows) + "x1");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

std::string Matrix::shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

Matrix Matrix::col(std::size_t c) const {
    Matrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (sgn(e) != 0) return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("cannot add " + a.shape() + " and " + b.shape());
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("cannot subtract " + a.shape() + " and " + b.shape());
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

Matrix mat_pow(const Matrix& m, unsigned k) {
    if (!m.square()) throw DimensionError("power of non-square matrix " + m.shape());
    Matrix result = Matrix::identity(m.rows());
    Matrix base = m;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Echelon rref(const Matrix& m) {
    Echelon e{m, {}};
    Matrix& a = e.reduced;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t p = row;
        while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = c; j < a.cols(); ++j) swap(a(p, j), a(row, j));
        const Rational inv = 1 / a(row, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || sgn(a(r, c)) == 0) continue;
            const Rational f = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(row, j);
        }
        e.pivots.push_back(c);
        ++row;
    }
    return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Matrix> kernel_basis(const Matrix& m) {
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Matrix> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Matrix v(m.cols(), 1);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& m) {
    if (!m.square()) throw DimensionError("inverse of non-square matrix " + m.shape());
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const Echelon e = rref(aug);
    if (n > 0 && (e.pivots.size() < n || e.pivots[n - 1] != n - 1))
        throw DimensionError("matrix " + m.shape() + " is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("cannot solve " + a.shape() + " against " + b.shape());
    return inverse(a) * b;
}

std::size_t span_dimension(std::span<const Matrix> vectors, std::size_t rows) {
    if (vectors.empty()) return 0;
    return rank(Matrix::from_columns(vectors, rows));
}

Matrix jordan_block(const Rational& eigenvalue, std::size_t size) {
    Matrix j(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        j(i, i) = eigenvalue;
        if (i + 1 < size) j(i + 1, i) = 1;
    }
    return j;
}

Matrix direct_sum(std::span<const Matrix> blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.square()) throw DimensionError("direct sum of non-square block " + b.shape());
        n += b.rows();
    }
    Matrix m(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return m;
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace centorb
