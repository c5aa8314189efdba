#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncrat/corpus.hpp"
#include "ncrat/errors.hpp"
#include "ncrat/linalg.hpp"
#include "ncrat/parser.hpp"
#include "ncrat/random_expr.hpp"
#include "ncrat/realize.hpp"
#include "ncrat/rng.hpp"
#include "ncrat/series.hpp"

using namespace ncrat;

namespace {

Mat random_mat(Rng& rng, int rows, int cols, long range = 3) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational_in(-range, range);
    return m;
}

TruncSeries random_series(Rng& rng, int d, int n, int order) {
    TruncSeries s;
    s.d = d;
    s.rows = n;
    s.cols = n;
    s.order = order;
    for (const Word& w : words_up_to(d, order)) s.add_coeff(w, random_mat(rng, n, n, 2));
    return s;
}

}  // namespace

TEST_CASE("geometric series") {
    TruncSeries s = expand(parse("inv(1 - z1)", 1), 3);
    CHECK(s.coeff(Word::empty()) == Mat::identity(1));
    CHECK(s.coeff(Word({1})) == Mat::identity(1));
    CHECK(s.coeff(Word({1, 1})) == Mat::identity(1));
    CHECK(s.coeff(Word({1, 1, 1})) == Mat::identity(1));
    CHECK(s.coeffs.size() == 4);
}

TEST_CASE("transfer function expansion matches the state-space word products") {
    Rng rng(21);
    for (int k = 0; k < 20; ++k) {
        int m = 1 + static_cast<int>(rng.int_in(0, 2));
        FmRealization r;
        r.d = 2;
        r.p = 1 + static_cast<int>(rng.int_in(0, 1));
        r.q = 1 + static_cast<int>(rng.int_in(0, 1));
        r.m = m;
        for (int j = 0; j < 2; ++j) {
            r.A.push_back(random_mat(rng, m, m, 2));
            r.B.push_back(random_mat(rng, m, r.q, 2));
        }
        r.C = random_mat(rng, r.p, m, 2);
        r.D = random_mat(rng, r.p, r.q, 2);
        TruncSeries s = expand(transfer_expr(r), 5);
        CHECK(s.coeff(Word::empty()) == r.D);
        // oracle: C A^u B_j at u concat [j], by direct matrix powers
        for (const Word& u : words_up_to(2, 4))
            for (int j = 1; j <= 2; ++j) {
                Mat acc = r.C;
                for (int letter : u.letters()) acc = acc * r.A[static_cast<std::size_t>(letter - 1)];
                acc = acc * r.B[static_cast<std::size_t>(j - 1)];
                CHECK(s.coeff(u.concat(Word::letter(j))) == acc);
            }
    }
}

TEST_CASE("expansion requires regularity at zero") {
    CHECK_THROWS_AS(expand(parse("z1 * inv(z1)", 1), 3), NotRegularAtZero);
    CHECK_THROWS_AS(expand(corpus::pair_r1(), 3), NotRegularAtZero);
    try {
        expand(parse("1 + inv(z1)", 1), 2);
        CHECK(false);
    } catch (const NotRegularAtZero& ex) {
        CHECK(ex.path.find("inv") != std::string::npos);
    }
}

TEST_CASE("series inverse of a constant identity") {
    TruncSeries one;
    one.d = 2;
    one.rows = 2;
    one.cols = 2;
    one.order = 4;
    one.add_coeff(Word::empty(), Mat::identity(2));
    CHECK(series_invert(one, 4) == one);
}

TEST_CASE("series inverse of 1 - z1 - z2 has all-ones coefficients") {
    TruncSeries s;
    s.d = 2;
    s.rows = 1;
    s.cols = 1;
    s.order = 4;
    s.add_coeff(Word::empty(), Mat::identity(1));
    s.add_coeff(Word({1}), -Mat::identity(1));
    s.add_coeff(Word({2}), -Mat::identity(1));
    TruncSeries t = series_invert(s, 4);
    for (const Word& w : words_up_to(2, 4)) CHECK(t.coeff(w) == Mat::identity(1));
    // multiply back: the Cauchy products must cancel
    TruncSeries prod = s * t;
    CHECK(prod.coeff(Word::empty()) == Mat::identity(1));
    for (const Word& w : words_up_to(2, 4))
        if (!w.is_empty()) CHECK(prod.coeff(w).is_zero());
}

TEST_CASE("series inverse is a right inverse for random series") {
    Rng rng(22);
    for (int k = 0; k < 25; ++k) {
        TruncSeries s = random_series(rng, 2, 2, 3);
        if (exact_det(s.coeff(Word::empty())) == 0) continue;
        TruncSeries t = series_invert(s, 3);
        TruncSeries prod = s * t;
        CHECK(prod.coeff(Word::empty()) == Mat::identity(2));
        for (const Word& w : words_up_to(2, 3))
            if (!w.is_empty()) CHECK(prod.coeff(w).is_zero());
    }
}

TEST_CASE("series inverse needs an invertible constant term") {
    TruncSeries s;
    s.d = 1;
    s.rows = 1;
    s.cols = 1;
    s.order = 2;
    s.add_coeff(Word({1}), Mat::identity(1));
    CHECK_THROWS_AS(series_invert(s, 2), SingularConstantTerm);
}

TEST_CASE("expansion is additive and multiplicative") {
    int done = 0;
    std::uint64_t seed = 2200;
    while (done < 25) {
        ++seed;
        GenOptions opt;
        opt.require_regular_at_zero = true;
        opt.depth = 2;
        RatExpr a = random_expr(seed * 2, opt);
        RatExpr b = random_expr(seed * 2 + 1, opt);
        TruncSeries sa = expand(a, 4), sb = expand(b, 4);
        CHECK(expand(make_add(a, b), 4) == sa + sb);
        CHECK(expand(make_mul(a, b), 4) == sa * sb);
        ++done;
    }
}

TEST_CASE("polynomial expansion returns the coefficient map exactly") {
    RatExpr p = corpus::worked_poly();
    TruncSeries s = expand(p, 2);
    CHECK(s.coeffs.size() == p.poly().terms().size());
    for (const auto& [w, c] : p.poly().terms()) CHECK(s.coeff(w) == c);
}
