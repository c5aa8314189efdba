#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "ncrat/rational.hpp"

namespace ncrat {

/// Dense matrix over the exact rationals, row-major.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
        assert(rows >= 0 && cols >= 0);
    }
    Mat(int rows, int cols, std::vector<Rational> entries);

    /// Builds from nested initializer lists of longs, for test literals.
    static Mat from_int_rows(const std::vector<std::vector<long>>& rows);
    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    /// Scalar multiple of the identity.
    static Mat scalar(int n, const Rational& value);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    const Rational& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    Rational& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

    Mat transpose() const;
    Mat block(int row0, int col0, int nrows, int ncols) const;
    void set_block(int row0, int col0, const Mat& sub);

    Mat operator+(const Mat& other) const;
    Mat operator-(const Mat& other) const;
    Mat operator-() const;
    Mat operator*(const Mat& other) const;
    Mat operator*(const Rational& scalar) const;
    bool operator==(const Mat& other) const;
    bool operator!=(const Mat& other) const { return !(*this == other); }

    std::string to_string() const;

  private:
    int rows_, cols_;
    std::vector<Rational> entries_;
};

inline Mat operator*(const Rational& scalar, const Mat& m) { return m * scalar; }

/// Kronecker product with (i,j)-block A[i,j]*B. Throughout the library the
/// coefficient factor of an evaluated expression is placed first: P_w (x) Z^w.
Mat kron(const Mat& a, const Mat& b);

/// Stacks blocks of a rectangular grid; grid[i][j] shapes must conform.
Mat assemble_blocks(const std::vector<std::vector<Mat>>& grid);

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

/// The pn x pn permutation matrix P(p,n) = [E_ij^T] built from the matrix
/// units E_ij in F^{p x n}. It reorders Kronecker factors:
///     A (x) B = P(n,p) (B (x) A) P(m,q)^T   for A in F^{n x m}, B in F^{p x q},
/// and satisfies P(p,n)^{-1} = P(p,n)^T = P(n,p).
Mat commutation_matrix(int p, int n);

}  // namespace ncrat
