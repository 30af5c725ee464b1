#pragma once

#include <optional>
#include <vector>

#include "serre/rational.hpp"

namespace serre {

using Vec = std::vector<Rational>;

// Dense rational matrix.  0xn and nx0 are legal.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Rational& c) const;
    bool operator==(const Matrix& o) const = default;

    Vec apply(const Vec& v) const;  // matrix * column vector
    Matrix transpose() const;
    bool is_zero() const;

    // Horizontal / vertical concatenation.
    static Matrix hcat(const Matrix& l, const Matrix& r);
    static Matrix vcat(const Matrix& t, const Matrix& b);
    // Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(int rows, const std::vector<Vec>& cols);
    Vec column(int j) const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivot_cols;
};

// Reduced row echelon form; rank = number of pivot columns.
RrefResult rref(const Matrix& m);
int rank(const Matrix& m);

// Basis of the null space {v : m v = 0}; size = cols - rank.
std::vector<Vec> kernel_basis(const Matrix& m);

// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Columnwise solve: X with m X = b, or nullopt.
std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b);

// True iff square and invertible.
bool is_invertible(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace serre
