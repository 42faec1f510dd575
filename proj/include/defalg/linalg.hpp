#pragma once

#include "defalg/core.hpp"

#include <optional>
#include <vector>

namespace defalg {

/// Dense rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::vector<Scalar> column(int c) const;
    static Matrix from_columns(int rows, const std::vector<std::vector<Scalar>>& cols);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

struct RowEchelon {
    Matrix reduced;          // reduced row echelon form
    std::vector<int> pivots; // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
int rank(const Matrix& m);
/// Basis of {x : m x = 0}.
std::vector<std::vector<Scalar>> kernel(const Matrix& m);
/// Some x with m x = b, or nullopt.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);
/// Indices of a maximal independent subset of the given vectors, greedy in order.
std::vector<int> independent_subset(const std::vector<std::vector<Scalar>>& vectors, int dim);

}  // namespace defalg
