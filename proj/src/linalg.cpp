#include "defalg/linalg.hpp"

namespace defalg {

std::vector<Scalar> Matrix::column(int c) const {
    std::vector<Scalar> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::from_columns(int rows, const std::vector<std::vector<Scalar>>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
    std::vector<Scalar> y(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (sgn(x[c]) != 0) y[r] += (*this)(r, c) * x[c];
    return y;
}

RowEchelon rref(Matrix m) {
    RowEchelon out;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (sgn(m(r, col)) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
        Scalar inv = 1 / m(row, col);
        for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            Scalar f = m(r, col);
            for (int c = col; c < m.cols(); ++c)
                if (sgn(m(row, c)) != 0) m(r, c) -= f * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<std::vector<Scalar>> kernel(const Matrix& m) {
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    Matrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    auto e = rref(aug);
    std::vector<Scalar> x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == m.cols()) return std::nullopt;
        x[e.pivots[r]] = e.reduced(static_cast<int>(r), m.cols());
    }
    return x;
}

std::vector<int> independent_subset(const std::vector<std::vector<Scalar>>& vectors, int dim) {
    auto e = rref(Matrix::from_columns(dim, vectors));
    return e.pivots;
}

}  // namespace defalg
