#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ncrat/point.hpp"
#include "ncrat/poly.hpp"

namespace ncrat {

enum class NodeKind { Poly, Add, Mul, Inv, Block, Tensor, Iota };

struct ExprNode;

/// Immutable matrix-valued noncommutative rational expression in one or
/// several tuples of indeterminates. Values share subtrees freely; every
/// operation builds new nodes. Tuple slots are numbered 1..arity and the last
/// slot is the one the difference operators act on.
class RatExpr {
  public:
    RatExpr() = default;

    bool valid() const { return node_ != nullptr; }
    NodeKind kind() const;
    int d() const;
    int arity() const;
    int rows() const;
    int cols() const;
    bool is_square() const { return rows() == cols(); }

    /// Poly leaves only.
    int slot() const;
    const MatPoly& poly() const;
    bool is_poly() const { return valid() && kind() == NodeKind::Poly; }
    bool is_zero_poly() const { return is_poly() && poly().is_zero(); }

    const RatExpr& lhs() const;
    const RatExpr& rhs() const;
    const RatExpr& inner() const;  // Inv, Iota

    int grid_rows() const;
    int grid_cols() const;
    const RatExpr& cell(int i, int j) const;

    /// Sample point where the inner value of an Inv node is invertible.
    const std::optional<MultiPoint>& inv_witness() const;

    std::size_t tree_size() const;

  private:
    explicit RatExpr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const ExprNode> node_;

    friend RatExpr make_poly(int slot, int arity, const MatPoly& poly);
    friend RatExpr make_add(const RatExpr& a, const RatExpr& b);
    friend RatExpr make_mul(const RatExpr& a, const RatExpr& b);
    friend RatExpr make_inv(const RatExpr& inner, std::optional<MultiPoint> witness);
    friend RatExpr make_block(const std::vector<std::vector<RatExpr>>& grid);
    friend RatExpr make_tensor(const RatExpr& a, const RatExpr& b);
    friend RatExpr make_iota(const RatExpr& inner);
};

/// Leaf: a polynomial in tuple #slot alone, viewed in `arity` tuples.
RatExpr make_poly(int slot, int arity, const MatPoly& poly);
RatExpr make_add(const RatExpr& a, const RatExpr& b);
RatExpr make_mul(const RatExpr& a, const RatExpr& b);
RatExpr make_inv(const RatExpr& inner, std::optional<MultiPoint> witness = std::nullopt);
RatExpr make_block(const std::vector<std::vector<RatExpr>>& grid);
RatExpr make_tensor(const RatExpr& a, const RatExpr& b);
RatExpr make_iota(const RatExpr& inner);

RatExpr poly_expr(const MatPoly& poly);                   // slot 1, arity 1
RatExpr const_expr(int d, const Mat& value, int arity = 1);
RatExpr scalar_expr(int d, const Rational& value, int arity = 1);
RatExpr one_expr(int d, int arity = 1);                   // scalar 1
RatExpr var_expr(int d, int j);                           // z_j
RatExpr negate(const RatExpr& e);
RatExpr scale(const RatExpr& e, const Rational& factor);
RatExpr sub(const RatExpr& a, const RatExpr& b);

/// Structural equality: same tree, same polynomials (inverse witnesses are
/// construction metadata and do not participate).
bool structurally_equal(const RatExpr& a, const RatExpr& b);

/// Collapses every Block whose cells are all Poly leaves in the same slot
/// into one matrix-coefficient Poly leaf. Used to compare parse/format
/// round-trips, where matrix polynomials print as block literals.
RatExpr normalize_poly_blocks(const RatExpr& e);

}  // namespace ncrat
