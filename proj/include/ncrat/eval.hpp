#pragma once

#include <vector>

#include "ncrat/expr.hpp"
#include "ncrat/point.hpp"

namespace ncrat {

/// Value of a multi-tuple expression, flattened in the canonical index order
/// (coefficient, tuple 1, ..., tuple l): data is the
/// (rows * prod n_i) x (cols * prod n_i) matrix whose row multi-index is
/// (coefficient row, tuple-1 row, ..., tuple-l row). All tensor reordering in
/// the library is conjugation by commutation matrices, carried out as index
/// permutations on this layout.
struct TensorValue {
    int rows = 0, cols = 0;      // coefficient shape (p, q)
    std::vector<int> sizes;      // matrix size per tuple slot
    Mat data;

    int total_size() const {
        int t = 1;
        for (int n : sizes) t *= n;
        return t;
    }
};

/// Evaluates an arity-1 expression at a d-tuple of n x n matrices; the result
/// is the flat (p n) x (q n) matrix. Throws NotInDomain when an inverse
/// encountered during the recursion is singular.
Mat evaluate(const RatExpr& e, const EvalPoint& z);

/// Evaluates an expression in l tuples jointly; sizes may differ per tuple.
TensorValue evaluate_multi(const RatExpr& e, const MultiPoint& points);

/// Applies the multilinear map encoded by a value with l+1 tuple factors to
/// directions H_k of size n_k x n_{k+1}; returns the p n_1 x q n_{l+1} matrix.
Mat contract(const TensorValue& v, const std::vector<Mat>& directions);

/// Reinterprets a flat matrix with factored row/column index spaces and
/// permutes the factors; equivalent to conjugation by commutation matrices.
Mat reorder_axes(const Mat& m, const std::vector<int>& row_dims,
                 const std::vector<int>& col_dims, const std::vector<int>& perm);

bool in_domain(const RatExpr& e, const MultiPoint& points);
bool in_domain(const RatExpr& e, const EvalPoint& z);

/// True when the size-1 zero tuple can be evaluated, i.e. every inverse has
/// an invertible constant term.
bool regular_at_zero(const RatExpr& e);

}  // namespace ncrat
