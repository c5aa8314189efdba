#pragma once

#include <cstdint>

#include "ncrat/expr.hpp"

namespace ncrat {

struct GenOptions {
    int d = 2;
    int depth = 3;
    int rows = 1;
    int cols = 1;
    /// When set, every inverse is arranged to have an invertible value at the
    /// zero tuple, so the whole expression is regular at zero.
    bool require_regular_at_zero = false;
    long coeff_range = 3;
    int max_poly_terms = 3;
    int max_poly_degree = 2;
};

/// Deterministic-in-seed random expression generator. Every Inv node is
/// constructed only after an invertibility witness is found by sampling
/// (at most 64 evaluation attempts per inverse); throws GenerationFailed
/// when the budget runs out.
RatExpr random_expr(std::uint64_t seed, const GenOptions& options);

RatExpr random_expr(std::uint64_t seed, int d, int depth, int rows = 1, int cols = 1);

}  // namespace ncrat
