#pragma once

#include "ncrat/expr.hpp"

namespace ncrat::corpus {

/// 1 + 2 z1 + 3 z2 + 5 z1^2 + 7 z1 z2 + 11 z2 z1 + 13 z2^2 (d = 2).
RatExpr worked_poly();

/// z1 z2 (z1 z2 - z2 z1)^{-1} and 1 + z2 z1 (z1 z2 - z2 z1)^{-1}: an
/// equivalent pair that is not regular at zero.
RatExpr pair_r1();
RatExpr pair_r2();

/// [1 0] [[1-z1, -z2], [-z2, 1-z1]]^{-1} [1; 0].
RatExpr matrix_r1();

/// (1 - z1 - z2 (1-z1)^{-1} z2)^{-1}: the Schur-complement form of matrix_r1.
RatExpr schur_r2();

/// -z2^{-1} (1-z1) (z2 - (1-z1) z2^{-1} (1-z1))^{-1}: the second scalar form.
RatExpr schur_r3();

/// z1 z2 - z2 z1.
RatExpr commutator();

/// The alternating polynomial sum_{pi in S_3} sign(pi)
/// x1^{pi(1)-1} x2 x1^{pi(2)-1} x2 x1^{pi(3)-1} x2; vanishes on 2x2 tuples.
RatExpr alternating_s3();

/// C (I - A_1 z_1 - ... - A_d z_d)^{-1} B as an expression.
RatExpr recognizable_expr(const std::vector<Mat>& a, const Mat& b, const Mat& c, int d);

}  // namespace ncrat::corpus
