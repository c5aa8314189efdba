#pragma once

#include <map>

#include "ncrat/matrix.hpp"
#include "ncrat/word.hpp"

namespace ncrat {

/// Matrix-valued noncommutative polynomial: a finite coefficient map
/// Word -> Mat, all coefficients of one shape, zero coefficients never stored.
class MatPoly {
  public:
    using Terms = std::map<Word, Mat, DegLexLess>;

    MatPoly(int d, int rows, int cols) : d_(d), rows_(rows), cols_(cols) {}

    static MatPoly constant(int d, const Mat& value);
    static MatPoly scalar_constant(int d, const Rational& value);
    /// The coordinate polynomial z_j (1x1).
    static MatPoly variable(int d, int j);
    /// coeff * z^w.
    static MatPoly monomial(int d, const Mat& coeff, const Word& w);

    int d() const { return d_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    /// Coefficient at w (zero matrix when absent).
    Mat coeff(const Word& w) const;
    Mat constant_term() const { return coeff(Word::empty()); }

    void add_term(const Word& w, const Mat& coeff);

    MatPoly operator+(const MatPoly& other) const;
    MatPoly operator-(const MatPoly& other) const;
    MatPoly operator-() const;
    MatPoly operator*(const MatPoly& other) const;
    MatPoly operator*(const Rational& scalar) const;
    bool operator==(const MatPoly& other) const;
    bool operator!=(const MatPoly& other) const { return !(*this == other); }

    /// Scalar (i,j) entry as a 1x1 polynomial.
    MatPoly entry(int i, int j) const;

  private:
    int d_, rows_, cols_;
    Terms terms_;
};

}  // namespace ncrat
