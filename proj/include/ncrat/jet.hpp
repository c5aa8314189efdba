#pragma once

#include <vector>

#include "ncrat/expr.hpp"
#include "ncrat/point.hpp"

namespace ncrat {

/// Element of Q[t]/(t^3). Units are exactly the jets with c0 != 0. Serves as
/// an independent route to directional derivatives and Hessians: evaluate at
/// Z + tW over this ring and read off the t-coefficients.
struct Jet {
    Rational c0, c1, c2;

    Jet() : c0(0), c1(0), c2(0) {}
    explicit Jet(Rational a) : c0(std::move(a)), c1(0), c2(0) {}
    Jet(Rational a, Rational b, Rational c)
        : c0(std::move(a)), c1(std::move(b)), c2(std::move(c)) {}

    Jet operator+(const Jet& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
    Jet operator-(const Jet& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
    Jet operator-() const { return {-c0, -c1, -c2}; }
    Jet operator*(const Jet& o) const {
        return {c0 * o.c0, c0 * o.c1 + c1 * o.c0, c0 * o.c2 + c1 * o.c1 + c2 * o.c0};
    }
    bool operator==(const Jet& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }
    bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
    bool is_unit() const { return c0 != 0; }
    Jet inv() const;
};

/// Dense matrix over jets; just enough arithmetic for evaluation.
struct JetMat {
    int rows = 0, cols = 0;
    std::vector<Jet> entries;

    JetMat() = default;
    JetMat(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}
    static JetMat identity(int n);
    /// Embeds Z + t W entrywise.
    static JetMat from_line(const Mat& z, const Mat& w);

    const Jet& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
    Jet& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }

    JetMat operator+(const JetMat& o) const;
    JetMat operator*(const JetMat& o) const;
    Mat coeff(int k) const;  // matrix of t^k coefficients, k in 0..2
};

/// Gauss-Jordan over the local ring: pivots must be units. Throws
/// SingularMatrix when no unit pivot exists (the t=0 value is singular).
JetMat jet_inverse(const JetMat& m);

/// Evaluates an arity-1 expression at Z + tW over Q[t]/(t^3).
JetMat evaluate_jet(const RatExpr& e, const EvalPoint& z, const std::vector<Mat>& w);

}  // namespace ncrat
