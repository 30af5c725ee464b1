#include "serre/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace serre {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (serre::is_zero(x)) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (serre::is_zero(o.at(k, j))) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Rational& c) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix apply shape mismatch");
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!serre::is_zero(at(i, j))) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!serre::is_zero(x)) return false;
    return true;
}

Matrix Matrix::hcat(const Matrix& l, const Matrix& r) {
    if (l.rows() != r.rows()) throw std::invalid_argument("hcat shape mismatch");
    Matrix m(l.rows(), l.cols() + r.cols());
    for (int i = 0; i < l.rows(); ++i) {
        for (int j = 0; j < l.cols(); ++j) m.at(i, j) = l.at(i, j);
        for (int j = 0; j < r.cols(); ++j) m.at(i, l.cols() + j) = r.at(i, j);
    }
    return m;
}

Matrix Matrix::vcat(const Matrix& t, const Matrix& b) {
    if (t.cols() != b.cols()) throw std::invalid_argument("vcat shape mismatch");
    Matrix m(t.rows() + b.rows(), t.cols());
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j) m.at(i, j) = t.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(t.rows() + i, j) = b.at(i, j);
    return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<Vec>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        assert(static_cast<int>(cols[j].size()) == rows);
        for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
    }
    return m;
}

Vec Matrix::column(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
        int p = -1;
        for (int i = row; i < r.rows(); ++i)
            if (!is_zero(r.at(i, col))) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < r.cols(); ++j) std::swap(r.at(p, j), r.at(row, j));
        Rational inv = 1 / r.at(row, col);
        for (int j = col; j < r.cols(); ++j) r.at(row, j) *= inv;
        for (int i = 0; i < r.rows(); ++i) {
            if (i == row || is_zero(r.at(i, col))) continue;
            Rational f = r.at(i, col);
            for (int j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

std::vector<Vec> kernel_basis(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    auto x = solve_matrix(m, Matrix::from_columns(m.rows(), {b}));
    if (!x) return std::nullopt;
    return x->column(0);
}

std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    auto [r, pivots] = rref(Matrix::hcat(m, b));
    // Inconsistent iff some pivot lands in the augmented block.
    for (int c : pivots)
        if (c >= m.cols()) return std::nullopt;
    Matrix x(m.cols(), b.cols());
    for (size_t i = 0; i < pivots.size(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            x.at(pivots[i], j) = r.at(static_cast<int>(i), m.cols() + j);
    return x;
}

bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    auto [r, pivots] = rref(Matrix::hcat(m, Matrix::identity(m.rows())));
    if (static_cast<int>(pivots.size()) != m.rows() ||
        (!pivots.empty() && pivots.back() >= m.cols()))
        return std::nullopt;
    Matrix inv(m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j) inv.at(i, j) = r.at(i, m.cols() + j);
    return inv;
}

}  // namespace serre
