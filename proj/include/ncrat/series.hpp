#pragma once

#include <map>
#include <vector>

#include "ncrat/expr.hpp"

namespace ncrat {

/// Noncommutative formal power series with matrix coefficients, truncated at
/// word length `order`. Zero coefficients are not stored.
struct TruncSeries {
    int d = 0;
    int rows = 0, cols = 0;
    int order = 0;
    std::map<Word, Mat, DegLexLess> coeffs;

    Mat coeff(const Word& w) const;
    void add_coeff(const Word& w, const Mat& value);
    bool operator==(const TruncSeries& other) const;

    /// Truncated sum and Cauchy product (all splittings w = uv).
    TruncSeries operator+(const TruncSeries& other) const;
    TruncSeries operator*(const TruncSeries& other) const;
};

/// Keys of a multi-tuple series: one word per slot, ordered by total length
/// first, then componentwise deglex.
struct WordTupleLess {
    bool operator()(const std::vector<Word>& a, const std::vector<Word>& b) const;
};

/// Series of an expression in several tuples; truncation is by total length.
struct MultiSeries {
    int d = 0;
    int rows = 0, cols = 0;
    int arity = 1;
    int order = 0;
    std::map<std::vector<Word>, Mat, WordTupleLess> coeffs;

    Mat coeff(const std::vector<Word>& key) const;
    void add_coeff(const std::vector<Word>& key, const Mat& value);
};

/// Power series expansion at zero of an expression regular at zero, truncated
/// at word length `order`. Throws NotRegularAtZero when some inverse has a
/// singular constant term.
TruncSeries expand(const RatExpr& e, int order);

/// Multi-tuple expansion, truncated at total length `order`.
MultiSeries expand_multi(const RatExpr& e, int order);

/// Inverse of a series with invertible constant term, by the degree-by-degree
/// recursion t_w = -s_e^{-1} sum_{w=uv, |u|>=1} s_u t_v. Throws
/// SingularConstantTerm.
TruncSeries series_invert(const TruncSeries& s, int order);

}  // namespace ncrat
