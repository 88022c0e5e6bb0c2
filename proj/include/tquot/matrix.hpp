#pragma once

// Dense integer matrices with the elementary row/column operations used for
// Smith reduction and minor computations. Matrices with zero rows are legal
// (they model the trivial torus); zero columns are legal everywhere.

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tquot/integer.hpp"

namespace tquot {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
        : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("ragged initializer");
            for (long long v : row) data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Integer& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    void swap_rows(std::size_t i, std::size_t j) {
        check_row(i);
        check_row(j);
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        check_col(i);
        check_col(j);
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }

    void negate_row(std::size_t i) {
        check_row(i);
        for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
    }

    void negate_col(std::size_t j) {
        check_col(j);
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
    }

    // row[dst] += factor * row[src]
    void add_row_multiple(const Integer& factor, std::size_t src, std::size_t dst) {
        check_row(src);
        check_row(dst);
        for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
    }

    // col[dst] += factor * col[src]
    void add_col_multiple(const Integer& factor, std::size_t src, std::size_t dst) {
        check_col(src);
        check_col(dst);
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
    }

    IntMatrix submatrix_columns(const std::vector<std::size_t>& cols) const {
        IntMatrix m(rows_, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            check_col(cols[j]);
            for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, cols[j]);
        }
        return m;
    }

    IntMatrix without_row_col(std::size_t row, std::size_t col) const {
        check_row(row);
        check_col(col);
        IntMatrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == col) continue;
                m(mi, mj++) = (*this)(i, j);
            }
            ++mi;
        }
        return m;
    }

    IntMatrix without_col(std::size_t col) const {
        check_col(col);
        IntMatrix m(rows_, cols_ - 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == col) continue;
                m(i, mj++) = (*this)(i, j);
            }
        }
        return m;
    }

    bool col_is_zero(std::size_t j) const {
        check_col(j);
        for (std::size_t i = 0; i < rows_; ++i) {
            if ((*this)(i, j) != 0) return false;
        }
        return true;
    }

    Integer col_gcd(std::size_t j) const {
        check_col(j);
        Integer g = 0;
        for (std::size_t i = 0; i < rows_; ++i) g = gcd_int(g, (*this)(i, j));
        return g;
    }

    Integer row_gcd(std::size_t i) const {
        check_row(i);
        Integer g = 0;
        for (std::size_t j = 0; j < cols_; ++j) g = gcd_int(g, (*this)(i, j));
        return g;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
        IntMatrix m(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += a(i, k) * b(k, j);
            }
        }
        return m;
    }

    std::string to_string() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out << ' ';
                out << (*this)(i, j);
            }
            out << '\n';
        }
        return out.str();
    }

private:
    void check_row(std::size_t i) const {
        if (i >= rows_) throw std::out_of_range("row index out of range");
    }
    void check_col(std::size_t j) const {
        if (j >= cols_) throw std::out_of_range("column index out of range");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Integer> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w(p, k) == 0) ++p;
            if (p == n) return 0;
            w.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                w(i, j) = num / prev;  // division exact by Bareiss
            }
            w(i, k) = 0;
        }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : Integer(-w(n - 1, n - 1));
}

}  // namespace tquot
