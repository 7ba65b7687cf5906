#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "centro/errors.hpp"
#include "centro/scalar.hpp"

namespace centro {

// Dense matrix over an exact field scalar. All operations are pure and return
// new values; indexing in the C++ API is 0-based (file formats and
// documentation use the paper's 1-based a_{i,j}).
template <FieldScalar S>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const S& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw dimension_error("matrix dimensions must be positive");
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<S>> rows) {
        std::vector<std::vector<S>> v;
        for (const auto& r : rows) v.emplace_back(r);
        return from_rows(v);
    }

    static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw dimension_error("matrix dimensions must be positive");
        Matrix m(rows.size(), rows.front().size(), rows.front().front());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_) throw dimension_error("ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(std::size_t n, const S& exemplar) {
        Matrix m(n, n, zero_like(exemplar));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(exemplar);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    const S& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    // Any entry serves as the field exemplar for minting constants.
    const S& exemplar() const { return data_.front(); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b, "add");
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] + b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b, "subtract");
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = r.data_[i] - b.data_[i];
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw dimension_error("cannot multiply " + a.shape() + " by " + b.shape());
        Matrix r(a.rows_, b.cols_, zero_like(a.exemplar()));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a.at(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) = r(i, j) + a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend Matrix operator*(const S& c, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.data_) x = c * x;
        return r;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const Matrix& b, const char* op) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw dimension_error(std::string("cannot ") + op + " " + shape() + " and " + b.shape());
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<S> data_;
};

template <FieldScalar S>
Matrix<S> transpose(const Matrix<S>& a) {
    Matrix<S> r(a.cols(), a.rows(), zero_like(a.exemplar()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a.at(i, j);
    return r;
}

// Copy of rows [r0, r1) x cols [c0, c1).
template <FieldScalar S>
Matrix<S> block(const Matrix<S>& a, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    if (r1 > a.rows() || c1 > a.cols() || r0 >= r1 || c0 >= c1)
        throw dimension_error("block range out of bounds for " + a.shape());
    Matrix<S> r(r1 - r0, c1 - c0, zero_like(a.exemplar()));
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) r(i - r0, j - c0) = a.at(i, j);
    return r;
}

// The paper's M(I~): first k rows of A restricted to the k listed columns,
// which must be strictly ascending (0-based here).
template <FieldScalar S>
Matrix<S> submatrix_by_columns(const Matrix<S>& a, const std::vector<std::size_t>& columns) {
    std::size_t k = columns.size();
    if (k == 0 || k > a.rows()) throw dimension_error("column set size must be in [1, rows]");
    for (std::size_t j = 0; j < k; ++j) {
        if (columns[j] >= a.cols()) throw dimension_error("column index out of range");
        if (j > 0 && columns[j] <= columns[j - 1])
            throw dimension_error("column set must be strictly ascending");
    }
    Matrix<S> r(k, k, zero_like(a.exemplar()));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) r(i, j) = a.at(i, columns[j]);
    return r;
}

// Exact Gaussian elimination. Pivot rule: first nonzero entry in the column,
// scanning top-down (exact arithmetic needs no magnitude pivoting and this
// keeps runs deterministic).
template <FieldScalar S>
S det_gauss(const Matrix<S>& a) {
    if (!a.square()) throw dimension_error("determinant of non-square " + a.shape());
    const std::size_t n = a.rows();
    Matrix<S> m = a;
    bool negate = false;
    S det = one_like(a.exemplar());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && is_zero(m.at(pivot, k))) ++pivot;
        if (pivot == n) return zero_like(a.exemplar());
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            negate = !negate;
        }
        const S p = m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(m.at(i, k))) continue;
            S factor = checked_div(m.at(i, k), p);
            for (std::size_t j = k; j < n; ++j) m(i, j) = m(i, j) - factor * m.at(k, j);
        }
        det = det * p;
    }
    return negate ? -det : det;
}

// Fraction-free Bareiss elimination over the integers. All divisions are
// exact by the Sylvester identity; intermediate values stay integral.
inline Integer det_bareiss(const std::vector<std::vector<Integer>>& entries) {
    const std::size_t n = entries.size();
    for (const auto& row : entries)
        if (row.size() != n) throw dimension_error("determinant of non-square matrix");
    if (n == 0) throw dimension_error("matrix dimensions must be positive");
    auto m = entries;
    bool negate = false;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return negate ? Integer(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

inline bool is_integral_matrix(const Matrix<Rational>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_integral(a.at(i, j))) return false;
    return true;
}

inline std::vector<std::vector<Integer>> to_integer_rows(const Matrix<Rational>& a) {
    std::vector<std::vector<Integer>> rows(a.rows(), std::vector<Integer>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = integer_value(a.at(i, j));
    return rows;
}

// det_exact: fraction-free elimination on integer-entried rational matrices,
// exact division elimination everywhere else. Both paths agree exactly.
template <FieldScalar S>
S det_exact(const Matrix<S>& a) { return det_gauss(a); }

inline Rational det_exact(const Matrix<Rational>& a) {
    if (!a.square()) throw dimension_error("determinant of non-square " + a.shape());
    if (is_integral_matrix(a)) return Rational(det_bareiss(to_integer_rows(a)));
    return det_gauss(a);
}

// Gauss-Jordan inverse. Distinguishes "non-square" (dimension_error) from
// "singular" (arithmetic_error).
template <FieldScalar S>
Matrix<S> mat_inverse(const Matrix<S>& a) {
    if (!a.square()) throw dimension_error("cannot invert non-square " + a.shape());
    const std::size_t n = a.rows();
    Matrix<S> m = a;
    Matrix<S> inv = Matrix<S>::identity(n, a.exemplar());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && is_zero(m.at(pivot, k))) ++pivot;
        if (pivot == n) throw arithmetic_error("matrix is singular");
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(pivot, j));
                std::swap(inv(k, j), inv(pivot, j));
            }
        }
        const S p = m.at(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) = checked_div(m.at(k, j), p);
            inv(k, j) = checked_div(inv.at(k, j), p);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || is_zero(m.at(i, k))) continue;
            const S factor = m.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = m(i, j) - factor * m.at(k, j);
                inv(i, j) = inv(i, j) - factor * inv.at(k, j);
            }
        }
    }
    return inv;
}

// V^-1 A V; determinant-preserving.
template <FieldScalar S>
Matrix<S> conjugate_by(const Matrix<S>& a, const Matrix<S>& v) {
    if (!a.square() || !v.square() || a.rows() != v.rows())
        throw dimension_error("conjugation requires square matrices of equal order");
    return mat_inverse(v) * a * v;
}

template <FieldScalar S>
bool is_zero_matrix(const Matrix<S>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_zero(a.at(i, j))) return false;
    return true;
}

} // namespace centro
