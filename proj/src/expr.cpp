#include "ncrat/expr.hpp"

#include "ncrat/errors.hpp"

namespace ncrat {

struct ExprNode {
    NodeKind kind;
    int d = 0;
    int arity = 1;
    int rows = 0, cols = 0;

    int slot = 1;                  // Poly
    std::optional<MatPoly> poly;   // Poly

    RatExpr child0, child1;        // Add/Mul/Tensor; Inv/Iota use child0

    int grid_rows = 0, grid_cols = 0;
    std::vector<RatExpr> cells;    // Block, row-major

    std::optional<MultiPoint> witness;  // Inv
};

NodeKind RatExpr::kind() const { return node_->kind; }
int RatExpr::d() const { return node_->d; }
int RatExpr::arity() const { return node_->arity; }
int RatExpr::rows() const { return node_->rows; }
int RatExpr::cols() const { return node_->cols; }
int RatExpr::slot() const { return node_->slot; }
const MatPoly& RatExpr::poly() const { return *node_->poly; }
const RatExpr& RatExpr::lhs() const { return node_->child0; }
const RatExpr& RatExpr::rhs() const { return node_->child1; }
const RatExpr& RatExpr::inner() const { return node_->child0; }
int RatExpr::grid_rows() const { return node_->grid_rows; }
int RatExpr::grid_cols() const { return node_->grid_cols; }
const RatExpr& RatExpr::cell(int i, int j) const {
    return node_->cells[static_cast<std::size_t>(i) * node_->grid_cols + j];
}
const std::optional<MultiPoint>& RatExpr::inv_witness() const { return node_->witness; }

std::size_t RatExpr::tree_size() const {
    switch (kind()) {
        case NodeKind::Poly: return 1;
        case NodeKind::Add:
        case NodeKind::Mul:
        case NodeKind::Tensor: return 1 + lhs().tree_size() + rhs().tree_size();
        case NodeKind::Inv:
        case NodeKind::Iota: return 1 + inner().tree_size();
        case NodeKind::Block: {
            std::size_t total = 1;
            for (const RatExpr& c : node_->cells) total += c.tree_size();
            return total;
        }
    }
    return 1;
}

RatExpr make_poly(int slot, int arity, const MatPoly& poly) {
    if (arity < 1) throw ShapeError("expression arity must be at least 1");
    if (slot < 1 || slot > arity) throw ShapeError("polynomial slot out of range");
    auto node = std::make_shared<ExprNode>();
    node->kind = NodeKind::Poly;
    node->d = poly.d();
    node->arity = arity;
    node->rows = poly.rows();
    node->cols = poly.cols();
    node->slot = slot;
    node->poly = poly;
    return RatExpr(std::move(node));
}

namespace {

void require_same_context(const RatExpr& a, const RatExpr& b, const char* op) {
    if (a.d() != b.d()) throw ShapeError(std::string(op) + ": mismatched indeterminate count");
    if (a.arity() != b.arity()) throw ShapeError(std::string(op) + ": mismatched arity");
}

}  // namespace

RatExpr make_add(const RatExpr& a, const RatExpr& b) {
    require_same_context(a, b, "add");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("add: operand shapes differ");
    // Purely polynomial subtrees collapse; no other rewriting is performed.
    if (a.is_poly() && b.is_poly() && a.slot() == b.slot())
        return make_poly(a.slot(), a.arity(), a.poly() + b.poly());
    auto node = std::make_shared<ExprNode>();
    node->kind = NodeKind::Add;
    node->d = a.d();
    node->arity = a.arity();
    node->rows = a.rows();
    node->cols = a.cols();
    node->child0 = a;
    node->child1 = b;
    return RatExpr(std::move(node));
}

RatExpr make_mul(const RatExpr& a, const RatExpr& b) {
    require_same_context(a, b, "mul");
    if (a.cols() != b.rows()) throw ShapeError("mul: inner dimensions differ");
    if (a.is_poly() && b.is_poly() && a.slot() == b.slot())
        return make_poly(a.slot(), a.arity(), a.poly() * b.poly());
    auto node = std::make_shared<ExprNode>();
    node->kind = NodeKind::Mul;
    node->d = a.d();
    node->arity = a.arity();
    node->rows = a.rows();
    node->cols = b.cols();
    node->child0 = a;
    node->child1 = b;
    return RatExpr(std::move(node));
}

RatExpr make_inv(const RatExpr& inner, std::optional<MultiPoint> witness) {
    if (!inner.is_square()) throw ShapeError("inv: expression must be square");
    auto node = std::make_shared<ExprNode>();
    node->kind = NodeKind::Inv;
    node->d = inner.d();
    node->arity = inner.arity();
    node->rows = inner.rows();
    node->cols = inner.cols();
    node->child0 = inner;
    node->witness = std::move(witness);
    return RatExpr(std::move(node));
}

RatExpr make_block(const std::vector<std::vector<RatExpr>>& grid) {
    int gr = static_cast<int>(grid.size());
    if (gr == 0) throw ShapeError("block: empty grid");
    int gc = static_cast<int>(grid[0].size());
    if (gc == 0) throw ShapeError("block: empty grid row");
    const RatExpr& first = grid[0][0];
    for (const auto& row : grid) {
        if (static_cast<int>(row.size()) != gc) throw ShapeError("block: ragged grid");
        for (const RatExpr& c : row) {
            if (c.d() != first.d() || c.arity() != first.arity())
                throw ShapeError("block: cells live in different contexts");
            if (c.rows() != first.rows() || c.cols() != first.cols())
                throw ShapeError("block: cells must share one shape");
        }
    }
    auto node = std::make_shared<ExprNode>();
    node->kind = NodeKind::Block;
    node->d = first.d();
    node->arity = first.arity();
    node->rows = gr * first.rows();
    node->cols = gc * first.cols();
    node->grid_rows = gr;
    node->grid_cols = gc;
    for (const auto& row : grid)
        for (const RatExpr& c : row) node->cells.push_back(c);
    return RatExpr(std::move(node));
}

RatExpr make_tensor(const RatExpr& a, const RatExpr& b) {
    if (a.d() != b.d()) throw ShapeError("tensor: mismatched indeterminate count");
    auto node = std::make_shared<ExprNode>();
    node->kind = NodeKind::Tensor;
    node->d = a.d();
    node->arity = a.arity() + b.arity();
    node->rows = a.rows() * b.rows();
    node->cols = a.cols() * b.cols();
    node->child0 = a;
    node->child1 = b;
    return RatExpr(std::move(node));
}

RatExpr make_iota(const RatExpr& inner) {
    auto node = std::make_shared<ExprNode>();
    node->kind = NodeKind::Iota;
    node->d = inner.d();
    node->arity = inner.arity() + 1;
    node->rows = inner.rows();
    node->cols = inner.cols();
    node->child0 = inner;
    return RatExpr(std::move(node));
}

RatExpr poly_expr(const MatPoly& poly) { return make_poly(1, 1, poly); }

RatExpr const_expr(int d, const Mat& value, int arity) {
    return make_poly(1, arity, MatPoly::constant(d, value));
}

RatExpr scalar_expr(int d, const Rational& value, int arity) {
    return make_poly(1, arity, MatPoly::scalar_constant(d, value));
}

RatExpr one_expr(int d, int arity) { return scalar_expr(d, Rational(1), arity); }

RatExpr var_expr(int d, int j) { return poly_expr(MatPoly::variable(d, j)); }

RatExpr negate(const RatExpr& e) { return scale(e, Rational(-1)); }

RatExpr scale(const RatExpr& e, const Rational& factor) {
    if (e.is_poly()) return make_poly(e.slot(), e.arity(), e.poly() * factor);
    Mat c = Mat::scalar(e.rows(), factor);
    return make_mul(make_poly(1, e.arity(), MatPoly::constant(e.d(), c)), e);
}

RatExpr sub(const RatExpr& a, const RatExpr& b) { return make_add(a, negate(b)); }

bool structurally_equal(const RatExpr& a, const RatExpr& b) {
    if (a.kind() != b.kind() || a.d() != b.d() || a.arity() != b.arity() ||
        a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    switch (a.kind()) {
        case NodeKind::Poly: return a.slot() == b.slot() && a.poly() == b.poly();
        case NodeKind::Add:
        case NodeKind::Mul:
        case NodeKind::Tensor:
            return structurally_equal(a.lhs(), b.lhs()) && structurally_equal(a.rhs(), b.rhs());
        case NodeKind::Inv:
        case NodeKind::Iota: return structurally_equal(a.inner(), b.inner());
        case NodeKind::Block: {
            if (a.grid_rows() != b.grid_rows() || a.grid_cols() != b.grid_cols()) return false;
            for (int i = 0; i < a.grid_rows(); ++i)
                for (int j = 0; j < a.grid_cols(); ++j)
                    if (!structurally_equal(a.cell(i, j), b.cell(i, j))) return false;
            return true;
        }
    }
    return false;
}

RatExpr normalize_poly_blocks(const RatExpr& e) {
    switch (e.kind()) {
        case NodeKind::Poly: return e;
        case NodeKind::Add:
            return make_add(normalize_poly_blocks(e.lhs()), normalize_poly_blocks(e.rhs()));
        case NodeKind::Mul:
            return make_mul(normalize_poly_blocks(e.lhs()), normalize_poly_blocks(e.rhs()));
        case NodeKind::Tensor:
            return make_tensor(normalize_poly_blocks(e.lhs()), normalize_poly_blocks(e.rhs()));
        case NodeKind::Inv: return make_inv(normalize_poly_blocks(e.inner()), e.inv_witness());
        case NodeKind::Iota: return make_iota(normalize_poly_blocks(e.inner()));
        case NodeKind::Block: {
            std::vector<std::vector<RatExpr>> grid(static_cast<std::size_t>(e.grid_rows()));
            bool all_poly = true;
            int slot = 1;
            for (int i = 0; i < e.grid_rows(); ++i)
                for (int j = 0; j < e.grid_cols(); ++j) {
                    RatExpr c = normalize_poly_blocks(e.cell(i, j));
                    if (!c.is_poly())
                        all_poly = false;
                    else
                        slot = c.slot();
                    grid[static_cast<std::size_t>(i)].push_back(c);
                }
            if (all_poly) {
                for (const auto& row : grid)
                    for (const RatExpr& c : row)
                        if (c.slot() != slot) all_poly = false;
            }
            if (!all_poly) return make_block(grid);
            // Assemble one matrix-coefficient polynomial out of the grid.
            int cr = e.cell(0, 0).rows(), cc = e.cell(0, 0).cols();
            MatPoly merged(e.d(), e.rows(), e.cols());
            for (int i = 0; i < e.grid_rows(); ++i)
                for (int j = 0; j < e.grid_cols(); ++j)
                    for (const auto& [w, c] : grid[static_cast<std::size_t>(i)]
                                                  [static_cast<std::size_t>(j)].poly().terms()) {
                        Mat big = Mat::zero(e.rows(), e.cols());
                        big.set_block(i * cr, j * cc, c);
                        merged.add_term(w, big);
                    }
            return make_poly(slot, e.arity(), merged);
        }
    }
    return e;
}

}  // namespace ncrat
