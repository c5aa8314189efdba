#pragma once

#include <optional>
#include <vector>

#include "ncrat/expr.hpp"
#include "ncrat/series.hpp"

namespace ncrat {

/// State-space data (m; A_1..A_d; B_1..B_d; C; D) presenting a function
/// regular at zero as D + C (I_m - A_1 z_1 - ... - A_d z_d)^{-1} (B_1 z_1 + ... + B_d z_d).
/// m = 0 encodes the constant function D.
struct FmRealization {
    int d = 0;
    int p = 0, q = 0;  // output/input shape
    int m = 0;         // state dimension
    std::vector<Mat> A;  // d matrices m x m
    std::vector<Mat> B;  // d matrices m x q
    Mat C;               // p x m
    Mat D;               // p x q

    static FmRealization constant(int d, const Mat& value);
    void check_shapes() const;
};

/// Builds a realization of an arity-1 expression regular at zero by
/// state-space arithmetic over the syntax tree. Throws NotRegularAtZero.
FmRealization realize(const RatExpr& e);

/// The transfer function as an expression AST.
RatExpr transfer_expr(const FmRealization& r);

/// Series coefficients of the transfer function, computed directly from the
/// state-space data: D at the empty word and C A^u B_j at u concat [j].
TruncSeries fm_series(const FmRealization& r, int order);

/// Kalman-style reduction: restrict to the controllable subspace
/// span ran{A^w B_j}, then quotient by the unobservable subspace
/// intersect ker{C A^w}. The result is controllable and observable, hence of
/// minimal state dimension for the function.
FmRealization minimize(const FmRealization& r);

/// Basis (columns) of the controllability space and the stacked basis (rows)
/// of the observability space; exposed for the exact rank checks.
Mat controllability_basis(const FmRealization& r);
Mat observability_basis(const FmRealization& r);

/// Minimal realization from series data via the block Hankel matrix
/// H[u,v] = s_{uv} over |u| <= bound, 1 <= |v| <= bound+1, by exact rank
/// factorization. Requires s.order >= 2*bound+1 (InsufficientOrder) and a
/// series actually generated by a realization of dimension <= bound
/// (RankMismatch otherwise).
FmRealization hankel_realize(const TruncSeries& s, int m_bound);

/// For minimal r1, r2: the unique invertible S with S A1_j = A2_j S,
/// S B1_j = B2_j, C1 = C2 S, D1 = D2 when both realize the same function;
/// nullopt otherwise. Throws NotMinimal when an input loses dimension under
/// minimize.
std::optional<Mat> similarity(const FmRealization& r1, const FmRealization& r2);

/// det(I_{mn} - sum_j A_j (x) Z_j) != 0, evaluated exactly.
bool pencil_domain_check(const FmRealization& r, const EvalPoint& z);

}  // namespace ncrat
