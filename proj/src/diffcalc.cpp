#include "ncrat/diffcalc.hpp"

#include "ncrat/errors.hpp"
#include "ncrat/series.hpp"

namespace ncrat {

namespace {

RatExpr zero_expr(int d, int rows, int cols, int arity) {
    return make_poly(1, arity, MatPoly(d, rows, cols));
}

/// iota of an iota-free tree: push one embedding down to the leaves.
RatExpr push_one(const RatExpr& e) {
    int ell = e.arity();
    switch (e.kind()) {
        case NodeKind::Poly:
            return make_poly(e.slot() == ell ? ell + 1 : e.slot(), ell + 1, e.poly());
        case NodeKind::Add: return make_add(push_one(e.lhs()), push_one(e.rhs()));
        case NodeKind::Mul: return make_mul(push_one(e.lhs()), push_one(e.rhs()));
        case NodeKind::Inv: {
            std::optional<MultiPoint> witness = e.inv_witness();
            if (witness) witness->insert(witness->end() - 1, zero_point(e.d(), 1));
            return make_inv(push_one(e.inner()), std::move(witness));
        }
        case NodeKind::Block: {
            std::vector<std::vector<RatExpr>> grid(static_cast<std::size_t>(e.grid_rows()));
            for (int i = 0; i < e.grid_rows(); ++i)
                for (int j = 0; j < e.grid_cols(); ++j)
                    grid[static_cast<std::size_t>(i)].push_back(push_one(e.cell(i, j)));
            return make_block(grid);
        }
        case NodeKind::Tensor: return make_tensor(e.lhs(), push_one(e.rhs()));
        case NodeKind::Iota: throw Error("push_one expects an iota-free tree");
    }
    throw Error("unreachable expression kind");
}

RatExpr delta_core(const RatExpr& e, int j);

/// Polynomial splitting rule in the last slot: for each occurrence of g_j in
/// a word w = u g_j v, emit (coefficient * z^u in the last slot) (x) z'^v.
RatExpr delta_poly(const RatExpr& e, int j) {
    int ell = e.arity();
    if (e.slot() != ell) return zero_expr(e.d(), e.rows(), e.cols(), ell + 1);
    const MatPoly& p = e.poly();
    std::map<Word, MatPoly, DegLexLess> by_right;  // v -> sum_u P_{u g_j v} z^u
    for (const auto& [w, c] : p.terms())
        for (int i = 0; i < w.length(); ++i) {
            if (w.at(i) != j) continue;
            Word u = w.prefix(i), v = w.suffix_from(i + 1);
            auto it = by_right.find(v);
            if (it == by_right.end())
                it = by_right.emplace(v, MatPoly(p.d(), p.rows(), p.cols())).first;
            it->second.add_term(u, c);
        }
    RatExpr acc;
    for (const auto& [v, left] : by_right) {
        if (left.is_zero()) continue;
        RatExpr term = make_tensor(
            make_poly(ell, ell, left),
            make_poly(1, 1, MatPoly::monomial(p.d(), Mat::identity(1), v)));
        acc = acc.valid() ? make_add(acc, term) : term;
    }
    if (!acc.valid()) return zero_expr(e.d(), e.rows(), e.cols(), ell + 1);
    return acc;
}

RatExpr delta_core(const RatExpr& e, int j) {
    switch (e.kind()) {
        case NodeKind::Poly: return delta_poly(e, j);
        case NodeKind::Add: return make_add(delta_core(e.lhs(), j), delta_core(e.rhs(), j));
        case NodeKind::Mul: {
            RatExpr first = make_mul(delta_core(e.lhs(), j), make_iota(e.rhs()));
            RatExpr second =
                make_mul(make_tensor(e.lhs(), one_expr(e.d(), 1)), delta_core(e.rhs(), j));
            return make_add(first, second);
        }
        case NodeKind::Inv: {
            RatExpr d_inner = delta_core(e.inner(), j);
            RatExpr prod =
                make_mul(make_mul(make_tensor(e, one_expr(e.d(), 1)), d_inner), make_iota(e));
            return negate(prod);
        }
        case NodeKind::Block: {
            std::vector<std::vector<RatExpr>> grid(static_cast<std::size_t>(e.grid_rows()));
            for (int i = 0; i < e.grid_rows(); ++i)
                for (int k = 0; k < e.grid_cols(); ++k)
                    grid[static_cast<std::size_t>(i)].push_back(delta_core(e.cell(i, k), j));
            return make_block(grid);
        }
        case NodeKind::Tensor: return make_tensor(e.lhs(), delta_core(e.rhs(), j));
        case NodeKind::Iota: throw Error("delta_core expects an iota-free tree");
    }
    throw Error("unreachable expression kind");
}

}  // namespace

RatExpr push_iota(const RatExpr& e) {
    switch (e.kind()) {
        case NodeKind::Poly: return e;
        case NodeKind::Add: return make_add(push_iota(e.lhs()), push_iota(e.rhs()));
        case NodeKind::Mul: return make_mul(push_iota(e.lhs()), push_iota(e.rhs()));
        case NodeKind::Inv: return make_inv(push_iota(e.inner()), e.inv_witness());
        case NodeKind::Block: {
            std::vector<std::vector<RatExpr>> grid(static_cast<std::size_t>(e.grid_rows()));
            for (int i = 0; i < e.grid_rows(); ++i)
                for (int j = 0; j < e.grid_cols(); ++j)
                    grid[static_cast<std::size_t>(i)].push_back(push_iota(e.cell(i, j)));
            return make_block(grid);
        }
        case NodeKind::Tensor: return make_tensor(push_iota(e.lhs()), push_iota(e.rhs()));
        case NodeKind::Iota: return push_one(push_iota(e.inner()));
    }
    throw Error("unreachable expression kind");
}

RatExpr delta(const RatExpr& e, int j) {
    if (j < 1 || j > e.d()) throw ShapeError("delta letter out of range");
    return delta_core(push_iota(e), j);
}

RatExpr iota(const RatExpr& e) { return make_iota(e); }

RatExpr delta_word(const RatExpr& e, const Word& w) {
    if (e.arity() != 1) throw DimensionMismatch("delta_word expects an arity-1 expression");
    RatExpr acc = e;
    for (int i = w.length() - 1; i >= 0; --i) acc = delta(acc, w.at(i));
    return acc;
}

namespace {

/// C (x) b as an expression: a block grid of scalar multiples of b.
RatExpr absorb_left(const Mat& c, const RatExpr& b) {
    if (c.rows() == 1 && c.cols() == 1) return scale(b, c.at(0, 0));
    std::vector<std::vector<RatExpr>> grid(static_cast<std::size_t>(c.rows()));
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j)
            grid[static_cast<std::size_t>(i)].push_back(scale(b, c.at(i, j)));
    return make_block(grid);
}

/// a (x) C: the coefficient index of a stays outermost, so expand a into its
/// scalar entries and tensor each with C.
RatExpr absorb_right(const RatExpr& a, const Mat& c) {
    if (c.rows() == 1 && c.cols() == 1) return scale(a, c.at(0, 0));
    std::vector<std::vector<RatExpr>> grid(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Mat row = Mat::zero(1, a.rows());
            row.at(0, i) = 1;
            Mat col = Mat::zero(a.cols(), 1);
            col.at(j, 0) = 1;
            RatExpr entry = make_mul(
                make_mul(make_poly(1, a.arity(), MatPoly::constant(a.d(), row)), a),
                make_poly(1, a.arity(), MatPoly::constant(a.d(), col)));
            grid[static_cast<std::size_t>(i)].push_back(absorb_left(c, entry));
        }
    return make_block(grid);
}

Mat value_at_zero(const RatExpr& e) {
    MultiPoint zeros(static_cast<std::size_t>(e.arity()), zero_point(e.d(), 1));
    return evaluate_multi(e, zeros).data;
}

}  // namespace

RatExpr subst_zero_slot(const RatExpr& e, int k) {
    int ell = e.arity();
    if (ell < 2) throw DimensionMismatch("substitution needs arity >= 2");
    if (k < 1 || k > ell) throw DimensionMismatch("substitution slot out of range");
    switch (e.kind()) {
        case NodeKind::Poly: {
            if (e.slot() == k)
                return make_poly(1, ell - 1,
                                 MatPoly::constant(e.d(), e.poly().constant_term()));
            int s = e.slot() > k ? e.slot() - 1 : e.slot();
            return make_poly(s, ell - 1, e.poly());
        }
        case NodeKind::Add:
            return make_add(subst_zero_slot(e.lhs(), k), subst_zero_slot(e.rhs(), k));
        case NodeKind::Mul:
            return make_mul(subst_zero_slot(e.lhs(), k), subst_zero_slot(e.rhs(), k));
        case NodeKind::Inv: return make_inv(subst_zero_slot(e.inner(), k));
        case NodeKind::Block: {
            std::vector<std::vector<RatExpr>> grid(static_cast<std::size_t>(e.grid_rows()));
            for (int i = 0; i < e.grid_rows(); ++i)
                for (int j = 0; j < e.grid_cols(); ++j)
                    grid[static_cast<std::size_t>(i)].push_back(subst_zero_slot(e.cell(i, j), k));
            return make_block(grid);
        }
        case NodeKind::Tensor: {
            int t = e.lhs().arity();
            if (k <= t) {
                if (t == 1) return absorb_left(value_at_zero(e.lhs()), e.rhs());
                return make_tensor(subst_zero_slot(e.lhs(), k), e.rhs());
            }
            if (e.rhs().arity() == 1) return absorb_right(e.lhs(), value_at_zero(e.rhs()));
            return make_tensor(e.lhs(), subst_zero_slot(e.rhs(), k - t));
        }
        case NodeKind::Iota: {
            // trivial slot is ell-1; a size-1 substitution there is a no-op
            if (k == ell - 1) return e.inner();
            if (k < ell - 1) return make_iota(subst_zero_slot(e.inner(), k));
            // k == ell: the former last slot; the trivial factor lands at the
            // end, i.e. a trailing tensor with the scalar 1
            if (e.inner().arity() == 1)
                return make_poly(1, 1, MatPoly::constant(e.d(), value_at_zero(e.inner())));
            return make_tensor(subst_zero_slot(e.inner(), ell - 1), one_expr(e.d(), 1));
        }
    }
    throw Error("unreachable expression kind");
}

RatExpr right_shift(const RatExpr& e, int j) {
    if (e.arity() != 1) throw DimensionMismatch("shifts expect an arity-1 expression");
    if (!regular_at_zero(e)) throw NotRegularAtZero("");
    return subst_zero_slot(delta(e, j), 2);
}

RatExpr left_shift(const RatExpr& e, int j) {
    if (e.arity() != 1) throw DimensionMismatch("shifts expect an arity-1 expression");
    if (!regular_at_zero(e)) throw NotRegularAtZero("");
    return subst_zero_slot(delta(e, j), 1);
}

namespace {

EvalPoint block_point_2(const EvalPoint& z, const EvalPoint& zp, const std::vector<Mat>& w) {
    std::vector<Mat> mats;
    for (int j = 0; j < z.d; ++j) {
        Mat m = Mat::zero(z.n + zp.n, z.n + zp.n);
        m.set_block(0, 0, z.mats[static_cast<std::size_t>(j)]);
        m.set_block(0, z.n, w[static_cast<std::size_t>(j)]);
        m.set_block(z.n, z.n, zp.mats[static_cast<std::size_t>(j)]);
        mats.push_back(std::move(m));
    }
    return EvalPoint(z.d, z.n + zp.n, std::move(mats));
}

Mat conjugate_to_matrix_first(const Mat& value, int n, int p, int q) {
    return commutation_matrix(n, p) * value * commutation_matrix(n, q).transpose();
}

}  // namespace

Mat delta_numeric(const RatExpr& e, const EvalPoint& z, const EvalPoint& zp,
                  const std::vector<Mat>& w) {
    if (e.arity() != 1) throw DimensionMismatch("delta_numeric expects an arity-1 expression");
    if (static_cast<int>(w.size()) != e.d())
        throw DimensionMismatch("need one direction matrix per letter");
    for (const Mat& wj : w)
        if (wj.rows() != z.n || wj.cols() != zp.n)
            throw DimensionMismatch("directions must be n x n'");
    int p = e.rows(), q = e.cols(), n = z.n, np = zp.n;
    Mat big = conjugate_to_matrix_first(evaluate(e, block_point_2(z, zp, w)), n + np, p, q);
    Mat top_left = big.block(0, 0, n * p, n * q);
    Mat bottom_right = big.block(n * p, n * q, np * p, np * q);
    Mat bottom_left = big.block(n * p, 0, np * p, n * q);
    if (!bottom_left.is_zero())
        throw Error("block evaluation lost upper-triangular structure");
    if (top_left != conjugate_to_matrix_first(evaluate(e, z), n, p, q) ||
        bottom_right != conjugate_to_matrix_first(evaluate(e, zp), np, p, q))
        throw Error("block evaluation diagonal does not reproduce e(Z), e(Z')");
    Mat off = big.block(0, n * q, n * p, np * q);
    return commutation_matrix(n, p).transpose() * off * commutation_matrix(np, q);
}

Mat directional_derivative(const RatExpr& e, const EvalPoint& z, const std::vector<Mat>& w) {
    return delta_numeric(e, z, z, w);
}

Mat finite_difference(const RatExpr& e, const EvalPoint& z0, const EvalPoint& z) {
    if (z0.n != z.n) throw DimensionMismatch("finite difference needs points of equal size");
    std::vector<Mat> w;
    for (int j = 0; j < e.d(); ++j)
        w.push_back(z.mats[static_cast<std::size_t>(j)] - z0.mats[static_cast<std::size_t>(j)]);
    return delta_numeric(e, z0, z, w);
}

Mat hessian(const RatExpr& e, const EvalPoint& z, const std::vector<Mat>& w) {
    if (e.arity() != 1) throw DimensionMismatch("hessian expects an arity-1 expression");
    if (static_cast<int>(w.size()) != e.d())
        throw DimensionMismatch("need one direction matrix per letter");
    int p = e.rows(), q = e.cols(), n = z.n;
    // jet-style 3x3 block point [[Z, W, 0], [0, Z, W], [0, 0, Z]]; the top
    // right corner of the conjugated value is the t^2 coefficient
    std::vector<Mat> mats;
    for (int j = 0; j < e.d(); ++j) {
        Mat m = Mat::zero(3 * n, 3 * n);
        const Mat& zj = z.mats[static_cast<std::size_t>(j)];
        const Mat& wj = w[static_cast<std::size_t>(j)];
        if (wj.rows() != n || wj.cols() != n)
            throw DimensionMismatch("directions must be n x n");
        m.set_block(0, 0, zj);
        m.set_block(n, n, zj);
        m.set_block(2 * n, 2 * n, zj);
        m.set_block(0, n, wj);
        m.set_block(n, 2 * n, wj);
        mats.push_back(std::move(m));
    }
    Mat big = conjugate_to_matrix_first(evaluate(e, EvalPoint(e.d(), 3 * n, std::move(mats))),
                                        3 * n, p, q);
    Mat corner = big.block(0, 2 * n * q, n * p, n * q);
    Mat val = commutation_matrix(n, p).transpose() * corner * commutation_matrix(n, q);
    return val * Rational(2);
}

DeltaSeries series_of_delta(const RatExpr& e, int j, int order) {
    if (e.arity() != 1) throw DimensionMismatch("series_of_delta expects arity 1");
    MultiSeries ms = expand_multi(delta(e, j), order);
    DeltaSeries out;
    for (const auto& [key, coeff] : ms.coeffs) out.emplace(std::make_pair(key[0], key[1]), coeff);
    return out;
}

}  // namespace ncrat
