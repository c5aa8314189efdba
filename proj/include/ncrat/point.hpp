#pragma once

#include <vector>

#include "ncrat/matrix.hpp"
#include "ncrat/word.hpp"

namespace ncrat {

/// A d-tuple of square matrices of one size, the argument of an evaluation.
struct EvalPoint {
    int d = 0;
    int n = 0;
    std::vector<Mat> mats;

    EvalPoint() = default;
    EvalPoint(int d_, int n_, std::vector<Mat> mats_);

    bool operator==(const EvalPoint& other) const {
        return d == other.d && n == other.n && mats == other.mats;
    }
};

/// One evaluation point per tuple slot of a multi-tuple expression.
using MultiPoint = std::vector<EvalPoint>;

/// The zero d-tuple of size n (size 1 is "the zero tuple" of the series world).
EvalPoint zero_point(int d, int n = 1);

/// The staircase point of a word w: Z_j carries a 1 on the superdiagonal at
/// every position where w has letter j, all of size |w|+1. Evaluating a
/// polynomial there exposes exactly the coefficient of w in the corner entry.
EvalPoint staircase_point(int d, const Word& w);

/// Direct sum of two points (block-diagonal tuples).
EvalPoint direct_sum(const EvalPoint& a, const EvalPoint& b);

}  // namespace ncrat
