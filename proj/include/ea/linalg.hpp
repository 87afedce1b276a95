#pragma once

// Dense exact linear algebra over a field K (Rational or QuadExt).

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ea {

template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<std::vector<K>>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix: shape mismatch");
        Matrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix: shape mismatch");
        std::vector<K> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t p = row;
            while (p < rows_ && (*this)(p, col).is_zero()) ++p;
            if (p == rows_) continue;
            swap_rows(p, row);
            K inv = K(1) / (*this)(row, col);
            for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || (*this)(i, col).is_zero()) continue;
                K f = (*this)(i, col);
                for (std::size_t j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    /// Basis of {x : A x = 0}.
    std::vector<std::vector<K>> nullspace() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::vector<K>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<K> v(cols_);
            v[free] = K(1);
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    K determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: determinant of non-square matrix");
        Matrix m = *this;
        K det(1);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t p = col;
            while (p < rows_ && m(p, col).is_zero()) ++p;
            if (p == rows_) return K(0);
            if (p != col) {
                m.swap_rows(p, col);
                det = -det;
            }
            det *= m(col, col);
            K inv = K(1) / m(col, col);
            for (std::size_t i = col + 1; i < rows_; ++i) {
                if (m(i, col).is_zero()) continue;
                K f = m(i, col) * inv;
                for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        return det;
    }

    /// Solves A X = B for square invertible A.
    Matrix solve(const Matrix& b) const {
        if (rows_ != cols_ || b.rows_ != rows_) throw std::invalid_argument("Matrix: shape mismatch in solve");
        if (cols_ == 0) return Matrix(0, b.cols_);
        Matrix aug(rows_, cols_ + b.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) aug(i, cols_ + j) = b(i, j);
        }
        auto pivots = aug.rref();
        if (pivots.size() < cols_ || pivots[cols_ - 1] != cols_ - 1) throw std::domain_error("Matrix: singular system");
        Matrix x(cols_, b.cols_);
        for (std::size_t i = 0; i < cols_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) x(i, j) = aug(i, cols_ + j);
        return x;
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> data_;
};

}  // namespace ea
