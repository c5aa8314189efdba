#include "ncrat/corpus.hpp"

#include "ncrat/parser.hpp"

namespace ncrat::corpus {

RatExpr worked_poly() {
    return parse("1 + 2*z1 + 3*z2 + 5*z1^2 + 7*z1*z2 + 11*z2*z1 + 13*z2^2", 2);
}

RatExpr pair_r1() { return parse("z1*z2 * inv(z1*z2 - z2*z1)", 2); }

RatExpr pair_r2() { return parse("1 + z2*z1 * inv(z1*z2 - z2*z1)", 2); }

RatExpr matrix_r1() {
    return parse("[[1, 0]] * inv([[1 - z1, -z2], [-z2, 1 - z1]]) * [[1], [0]]", 2);
}

RatExpr schur_r2() { return parse("inv(1 - z1 - z2 * inv(1 - z1) * z2)", 2); }

RatExpr schur_r3() {
    return parse("-inv(z2) * (1 - z1) * inv(z2 - (1 - z1) * inv(z2) * (1 - z1))", 2);
}

RatExpr commutator() { return parse("z1*z2 - z2*z1", 2); }

RatExpr alternating_s3() {
    MatPoly p(2, 1, 1);
    const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    const long signs[6] = {1, -1, -1, 1, 1, -1};
    for (int k = 0; k < 6; ++k) {
        std::vector<int> letters;
        for (int pos = 0; pos < 3; ++pos) {
            for (int e = 0; e < perms[k][pos] - 1; ++e) letters.push_back(1);
            letters.push_back(2);
        }
        p.add_term(Word(letters), Mat::scalar(1, rat(signs[k])));
    }
    return poly_expr(p);
}

RatExpr recognizable_expr(const std::vector<Mat>& a, const Mat& b, const Mat& c, int d) {
    int m = b.rows();
    MatPoly pencil(d, m, m);
    pencil.add_term(Word::empty(), Mat::identity(m));
    for (int j = 1; j <= d; ++j)
        pencil.add_term(Word::letter(j), -a[static_cast<std::size_t>(j - 1)]);
    RatExpr resolvent = make_inv(make_poly(1, 1, pencil), MultiPoint{zero_point(d, 1)});
    return make_mul(make_mul(make_poly(1, 1, MatPoly::constant(d, c)), resolvent),
                    make_poly(1, 1, MatPoly::constant(d, b)));
}

}  // namespace ncrat::corpus
