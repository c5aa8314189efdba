#include "ncrat/poly.hpp"

#include "ncrat/errors.hpp"

namespace ncrat {

MatPoly MatPoly::constant(int d, const Mat& value) {
    MatPoly p(d, value.rows(), value.cols());
    p.add_term(Word::empty(), value);
    return p;
}

MatPoly MatPoly::scalar_constant(int d, const Rational& value) {
    Mat m(1, 1);
    m.at(0, 0) = value;
    return constant(d, m);
}

MatPoly MatPoly::variable(int d, int j) {
    if (j < 1 || j > d) throw ShapeError("variable index out of range: z" + std::to_string(j));
    MatPoly p(d, 1, 1);
    p.add_term(Word::letter(j), Mat::identity(1));
    return p;
}

MatPoly MatPoly::monomial(int d, const Mat& coeff, const Word& w) {
    MatPoly p(d, coeff.rows(), coeff.cols());
    p.add_term(w, coeff);
    return p;
}

bool MatPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_empty());
}

int MatPoly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.length();  // deglex: last key has max length
}

Mat MatPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    if (it == terms_.end()) return Mat::zero(rows_, cols_);
    return it->second;
}

void MatPoly::add_term(const Word& w, const Mat& coeff) {
    if (coeff.rows() != rows_ || coeff.cols() != cols_)
        throw DimensionMismatch("polynomial coefficient shape mismatch");
    for (int letter : w.letters())
        if (letter < 1 || letter > d_)
            throw ShapeError("word letter out of range for d=" + std::to_string(d_));
    if (coeff.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

MatPoly MatPoly::operator+(const MatPoly& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || d_ != other.d_)
        throw DimensionMismatch("polynomial addition shape mismatch");
    MatPoly out = *this;
    for (const auto& [w, c] : other.terms_) out.add_term(w, c);
    return out;
}

MatPoly MatPoly::operator-(const MatPoly& other) const { return *this + (-other); }

MatPoly MatPoly::operator-() const {
    MatPoly out(d_, rows_, cols_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

MatPoly MatPoly::operator*(const MatPoly& other) const {
    if (cols_ != other.rows_ || d_ != other.d_)
        throw DimensionMismatch("polynomial product shape mismatch");
    MatPoly out(d_, rows_, other.cols_);
    for (const auto& [u, a] : terms_)
        for (const auto& [v, b] : other.terms_) out.add_term(u.concat(v), a * b);
    return out;
}

MatPoly MatPoly::operator*(const Rational& scalar) const {
    MatPoly out(d_, rows_, cols_);
    if (scalar == 0) return out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * scalar);
    return out;
}

bool MatPoly::operator==(const MatPoly& other) const {
    return d_ == other.d_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           terms_ == other.terms_;
}

MatPoly MatPoly::entry(int i, int j) const {
    MatPoly out(d_, 1, 1);
    for (const auto& [w, c] : terms_) {
        Mat e(1, 1);
        e.at(0, 0) = c.at(i, j);
        out.add_term(w, e);
    }
    return out;
}

}  // namespace ncrat
