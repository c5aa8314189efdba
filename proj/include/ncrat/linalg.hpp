#pragma once

#include <optional>
#include <vector>

#include "ncrat/matrix.hpp"

namespace ncrat {

/// Exact rank via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
int exact_rank(const Mat& m);

/// Exact determinant via Bareiss elimination. Requires a square matrix.
Rational exact_det(const Mat& m);

struct Rref {
    Mat reduced;             // reduced row echelon form
    std::vector<int> pivots; // pivot column per nonzero row
};

/// Reduced row echelon form over Q (deterministic pivoting: first nonzero).
Rref rref(const Mat& m);

/// Inverse over Q; throws SingularMatrix.
Mat inverse(const Mat& m);

/// Solves A X = B exactly. Returns nullopt when inconsistent.
std::optional<Mat> solve_right(const Mat& a, const Mat& b);

/// Solves X A = B exactly. Returns nullopt when inconsistent.
std::optional<Mat> solve_left(const Mat& a, const Mat& b);

/// Columns form a basis of the kernel {x : A x = 0}.
Mat kernel_basis(const Mat& a);

/// Rank factorization m = F G with F = m[:, pivot cols] and G the nonzero
/// rows of rref(m); rank(m) columns/rows respectively.
struct RankFactorization {
    Mat left;   // F
    Mat right;  // G
    std::vector<int> pivots;
};
RankFactorization rank_factor(const Mat& m);

}  // namespace ncrat
