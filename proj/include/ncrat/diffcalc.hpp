#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ncrat/eval.hpp"
#include "ncrat/expr.hpp"

namespace ncrat {

/// Difference-differential operator on the last tuple slot: arity l -> l+1.
/// Polynomials split around each occurrence of the letter, products follow
/// Delta(R1 R2) = Delta(R1) iota(R2) + (R1 (x) 1) Delta(R2), inverses follow
/// Delta(R^-1) = -(R^-1 (x) 1) Delta(R) iota(R^-1), blocks act entrywise and
/// Delta(R (x) R') = R (x) Delta(R').
RatExpr delta(const RatExpr& e, int j);

/// Embedding inserting a trivial tensor factor before the last slot.
RatExpr iota(const RatExpr& e);

/// Iterated delta in the composition order Delta^w = Delta_{w_1} ... applied
/// from the last letter of the stored word first; Delta^{empty} = identity.
RatExpr delta_word(const RatExpr& e, const Word& w);

/// Rewrites every iota node down to the polynomial leaves (slot relabeling);
/// value-preserving and size-preserving.
RatExpr push_iota(const RatExpr& e);

/// Substitutes the size-1 zero tuple into slot k (1-based), collapsing tensor
/// factors that become constant; arity l -> l-1.
RatExpr subst_zero_slot(const RatExpr& e, int k);

/// Backward shifts of an expression regular at zero: delta with the second
/// (right) resp. first (left) argument frozen at zero.
RatExpr right_shift(const RatExpr& e, int j);
RatExpr left_shift(const RatExpr& e, int j);

/// Numeric route through the block-triangular theorem: evaluates e at the
/// block point [[Z, W], [0, Z']], conjugates by commutation matrices, checks
/// that the diagonal blocks reproduce e(Z) and e(Z'), and returns the
/// off-diagonal block sum_j Delta_j(e)(Z, Z')(W_j).
Mat delta_numeric(const RatExpr& e, const EvalPoint& z, const EvalPoint& zp,
                  const std::vector<Mat>& w);

/// sum_j Delta_j(e)(Z, Z)(W_j) = d/dt e(Z + tW) at t=0.
Mat directional_derivative(const RatExpr& e, const EvalPoint& z, const std::vector<Mat>& w);

/// e(Z) - e(Z0) = sum_j Delta_j(e)(Z0, Z)(Z_j - Z0_j), evaluated via the
/// block route; exact.
Mat finite_difference(const RatExpr& e, const EvalPoint& z0, const EvalPoint& z);

/// sum_{i,j} Delta_i Delta_j e (Z,Z,Z)(W_i, W_j) = d^2/dt^2 e(Z + tW) at t=0,
/// via a single 3x3 block-triangular evaluation.
Mat hessian(const RatExpr& e, const EvalPoint& z, const std::vector<Mat>& w);

struct WordPairLess {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
        if (!(a.first == b.first)) return deglex_less(a.first, b.first);
        return deglex_less(a.second, b.second);
    }
};

using DeltaSeries = std::map<std::pair<Word, Word>, Mat, WordPairLess>;

/// Coefficients of the two-tuple expansion of Delta_j(e) up to total length
/// `order`: the coefficient at (u, v) is the (u g_j v)-coefficient of the
/// expansion of e.
DeltaSeries series_of_delta(const RatExpr& e, int j, int order);

}  // namespace ncrat
