#ifndef DUPSYS_EXACT_LINALG_HPP
#define DUPSYS_EXACT_LINALG_HPP

#include "dupsys/errors.hpp"
#include "dupsys/rational.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace dupsys {

// Dense row-major matrix. Entry type is Rational for the exact path and
// double for the floating path.
template <typename T> class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> multiply(const std::vector<T> &x) const {
        if (x.size() != cols_) throw InvalidParameter("matrix-vector size mismatch");
        std::vector<T> y(rows_, T(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if ((*this)(r, c) != 0) y[r] += (*this)(r, c) * x[c];
        return y;
    }

    bool operator==(const Matrix &other) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

struct ExactZero {
    bool operator()(const Rational &v) const { return v == 0; }
};

struct ThresholdZero {
    double threshold = 1e-10;
    bool operator()(double v) const { return std::abs(v) <= threshold; }
};

// Reduced row echelon form in place; returns the pivot column of each pivot row.
// Zero tests go through `is_zero`, so the same elimination serves the exact
// and the thresholded floating path. Zero entries are skipped when updating rows,
// which keeps sparse rate matrices cheap.
template <typename T, typename IsZero> std::vector<std::size_t> reduce_row_echelon(Matrix<T> &m, IsZero is_zero) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = m.rows();
        for (std::size_t r = row; r < m.rows(); ++r) {
            if (is_zero(m(r, col))) continue;
            if constexpr (std::is_floating_point_v<T>) {
                if (best == m.rows() || std::abs(m(r, col)) > std::abs(m(best, col))) best = r;
            } else {
                best = r;
                break;
            }
        }
        if (best == m.rows()) {
            for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = T(0);
            continue;
        }
        if (best != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
        T pivot = m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            if (m(row, c) != 0) m(row, c) /= pivot;
        std::vector<std::size_t> nonzero;
        for (std::size_t c = col + 1; c < m.cols(); ++c)
            if (m(row, c) != 0) nonzero.push_back(c);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            T factor = m(r, col);
            m(r, col) = T(0);
            for (std::size_t c : nonzero) {
                m(r, c) -= factor * m(row, c);
                if (is_zero(m(r, c))) m(r, c) = T(0);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Basis of {x : m x = 0}, one vector per free column, with a 1 in that column.
template <typename T, typename IsZero> std::vector<std::vector<T>> null_space(Matrix<T> m, IsZero is_zero) {
    std::vector<std::size_t> pivots = reduce_row_echelon(m, is_zero);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[free] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace dupsys

#endif
