#pragma once

#include <hharm6/coeff.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace hharm6 {

/// Dense matrix over the exact scalar field. Used only at catalog scales
/// (a few hundred rows), so no effort is spent on anything clever.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ExactCoeff::from_int(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    ExactCoeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const ExactCoeff& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    ExactMatrix operator+(const ExactMatrix& o) const {
        require_same_shape(o);
        ExactMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    ExactMatrix operator-(const ExactMatrix& o) const {
        require_same_shape(o);
        ExactMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

    ExactMatrix operator*(const ExactMatrix& o) const {
        if (cols_ != o.rows_) throw std::domain_error("ExactMatrix: shape mismatch in product");
        ExactMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) += at(i, k) * o.at(k, j);
                }
            }
        return r;
    }

    ExactMatrix scaled(const ExactCoeff& s) const {
        ExactMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
        return r;
    }

    ExactMatrix transposed() const {
        ExactMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

private:
    void require_same_shape(const ExactMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::domain_error("ExactMatrix: shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<ExactCoeff> data_;
};

using ExactVector = std::vector<ExactCoeff>;

/// In-place reduced row echelon form; returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref_in_place(ExactMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m.at(pr, col).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
        ExactCoeff inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            ExactCoeff f = m.at(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(ExactMatrix m) { return rref_in_place(m).size(); }

/// Basis of the null space of m (solutions of m x = 0), one vector per free column.
inline std::vector<ExactVector> kernel_basis(ExactMatrix m) {
    auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<ExactVector> basis;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        ExactVector v(m.cols());
        v[fc] = ExactCoeff::from_int(1);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -m.at(pr, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solver for membership in the span of a fixed set of vectors.
class SpanSolver {
public:
    explicit SpanSolver(const std::vector<ExactVector>& basis) {
        if (basis.empty()) return;
        dim_ = basis[0].size();
        n_ = basis.size();
        // rows = basis vectors augmented with coordinate bookkeeping columns
        aug_ = ExactMatrix(n_, dim_ + n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (basis[i].size() != dim_) throw std::domain_error("SpanSolver: ragged basis");
            for (std::size_t j = 0; j < dim_; ++j) aug_.at(i, j) = basis[i][j];
            aug_.at(i, dim_ + i) = ExactCoeff::from_int(1);
        }
        pivots_ = rref_in_place(aug_);
        for (auto c : pivots_)
            if (c >= dim_)
                throw std::domain_error("SpanSolver: basis vectors are linearly dependent");
    }

    std::size_t dimension() const { return n_; }

    /// Coordinates of v in the basis, or nullopt if v is outside the span.
    std::optional<ExactVector> express(const ExactVector& v) const {
        if (v.size() != dim_) throw std::domain_error("SpanSolver: dimension mismatch");
        ExactVector residual = v;
        ExactVector coords(n_);
        for (std::size_t pr = 0; pr < pivots_.size(); ++pr) {
            std::size_t pc = pivots_[pr];
            ExactCoeff f = residual[pc];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) residual[j] -= f * aug_.at(pr, j);
            for (std::size_t j = 0; j < n_; ++j) coords[j] += f * aug_.at(pr, dim_ + j);
        }
        for (const auto& x : residual)
            if (!x.is_zero()) return std::nullopt;
        return coords;
    }

private:
    std::size_t dim_ = 0, n_ = 0;
    ExactMatrix aug_;
    std::vector<std::size_t> pivots_;
};

} // namespace hharm6
