#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncrat/corpus.hpp"
#include "ncrat/errors.hpp"
#include "ncrat/eval.hpp"
#include "ncrat/linalg.hpp"
#include "ncrat/parser.hpp"
#include "ncrat/random_expr.hpp"
#include "ncrat/realize.hpp"
#include "ncrat/rng.hpp"

using namespace ncrat;

namespace {

Mat random_mat(Rng& rng, int rows, int cols, long range = 2) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational_in(-range, range);
    return m;
}

FmRealization random_realization(Rng& rng, int d, int p, int q, int m) {
    FmRealization r;
    r.d = d;
    r.p = p;
    r.q = q;
    r.m = m;
    for (int j = 0; j < d; ++j) {
        r.A.push_back(random_mat(rng, m, m));
        r.B.push_back(random_mat(rng, m, q));
    }
    r.C = random_mat(rng, p, m);
    r.D = random_mat(rng, p, q);
    return r;
}

RatExpr random_regular(std::uint64_t seed, int depth) {
    GenOptions opt;
    opt.require_regular_at_zero = true;
    opt.depth = depth;
    return random_expr(seed, opt);
}

}  // namespace

TEST_CASE("constants realize with state dimension zero") {
    Mat c = Mat::from_int_rows({{3, -1}});
    FmRealization r = realize(const_expr(2, c));
    CHECK(r.m == 0);
    CHECK(r.D == c);
    CHECK(structurally_equal(transfer_expr(r), const_expr(2, c)));
}

TEST_CASE("the pencil function matches its hand realization up to length 6") {
    FmRealization hand;
    hand.d = 2;
    hand.p = 1;
    hand.q = 1;
    hand.m = 2;
    hand.A = {Mat::identity(2), Mat::from_int_rows({{0, 1}, {1, 0}})};
    Mat b = Mat::from_int_rows({{1}, {0}});
    hand.B = {hand.A[0] * b, hand.A[1] * b};
    hand.C = Mat::from_int_rows({{1, 0}});
    hand.D = Mat::identity(1);
    TruncSeries s = expand(corpus::matrix_r1(), 6);
    CHECK(fm_series(hand, 6) == s);
    CHECK(fm_series(realize(corpus::matrix_r1()), 6) == s);
}

TEST_CASE("realize of a monomial is the two-state cascade") {
    FmRealization r = realize(parse("z1*z2", 2));
    CHECK(r.m == 2);
    TruncSeries s = fm_series(r, 4);
    CHECK(s.coeffs.size() == 1);
    CHECK(s.coeff(Word({1, 2})) == Mat::identity(1));
}

TEST_CASE("realization fails off the regular-at-zero class") {
    CHECK_THROWS_AS(realize(corpus::pair_r1()), NotRegularAtZero);
    CHECK_THROWS_AS(realize(parse("inv(z1)", 2)), NotRegularAtZero);
}

TEST_CASE("transfer expression round-trips the series of random expressions") {
    int done = 0;
    std::uint64_t seed = 3000;
    while (done < 50) {
        ++seed;
        RatExpr e = random_regular(seed, 2);
        FmRealization r = realize(e);
        if (r.m > 14) continue;  // keep the expression-path expansion small
        TruncSeries se = expand(e, 5);
        CHECK(fm_series(r, 5) == se);
        CHECK(expand(transfer_expr(r), 5) == se);
        ++done;
    }
}

TEST_CASE("recognizable form is reproduced via the D = CB shift") {
    Rng rng(31);
    for (int k = 0; k < 10; ++k) {
        int m = 1 + static_cast<int>(rng.int_in(0, 2));
        std::vector<Mat> a{random_mat(rng, m, m), random_mat(rng, m, m)};
        Mat b = random_mat(rng, m, 1), c = random_mat(rng, 1, m);
        RatExpr r = corpus::recognizable_expr(a, b, c, 2);
        FmRealization fm;
        fm.d = 2;
        fm.p = 1;
        fm.q = 1;
        fm.m = m;
        fm.A = a;
        fm.B = {a[0] * b, a[1] * b};
        fm.C = c;
        fm.D = c * b;
        CHECK(fm_series(fm, 5) == expand(r, 5));
    }
}

TEST_CASE("minimize is idempotent on minimal realizations") {
    RatExpr e = corpus::matrix_r1();
    FmRealization mini = minimize(realize(e));
    CHECK(mini.m == 2);
    CHECK(minimize(mini).m == 2);
}

TEST_CASE("minimize strips unreachable padding") {
    Rng rng(32);
    for (int k = 0; k < 10; ++k) {
        FmRealization r = random_realization(rng, 2, 1, 1, 2);
        FmRealization mini = minimize(r);
        // pad with an unreachable, unobservable state block
        FmRealization padded = r;
        padded.m = r.m + 2;
        for (int j = 0; j < 2; ++j) {
            Mat a = Mat::zero(padded.m, padded.m);
            a.set_block(0, 0, r.A[static_cast<std::size_t>(j)]);
            a.set_block(r.m, r.m, random_mat(rng, 2, 2));
            padded.A[static_cast<std::size_t>(j)] = a;
            padded.B[static_cast<std::size_t>(j)] =
                vstack(r.B[static_cast<std::size_t>(j)], Mat::zero(2, 1));
        }
        padded.C = hstack(r.C, Mat::zero(1, 2));
        FmRealization mini2 = minimize(padded);
        CHECK(mini2.m == mini.m);
        CHECK(fm_series(mini2, 2 * padded.m + 2) == fm_series(padded, 2 * padded.m + 2));
    }
}

TEST_CASE("minimize collapses unobservable realizations to constants") {
    Rng rng(36);
    FmRealization r = random_realization(rng, 2, 1, 1, 3);
    r.C = Mat::zero(1, 3);
    FmRealization mini = minimize(r);
    CHECK(mini.m == 0);
    CHECK(mini.D == r.D);
    CHECK(fm_series(mini, 4) == fm_series(r, 4));
}

TEST_CASE("minimal dimension equals the Hankel rank") {
    RatExpr e = corpus::matrix_r1();
    FmRealization mini = minimize(realize(e));
    TruncSeries s = expand(e, 7);
    std::vector<Word> rows = words_up_to(2, 3);
    std::vector<Word> cols;
    for (const Word& w : words_up_to(2, 4))
        if (!w.is_empty()) cols.push_back(w);
    Mat h(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            h.at(static_cast<int>(i), static_cast<int>(j)) =
                s.coeff(rows[i].concat(cols[j])).at(0, 0);
    CHECK(exact_rank(h) == mini.m);
}

TEST_CASE("hankel realization of the zero series is empty") {
    TruncSeries zero;
    zero.d = 2;
    zero.rows = 1;
    zero.cols = 1;
    zero.order = 5;
    FmRealization r = hankel_realize(zero, 2);
    CHECK(r.m == 0);
    CHECK(r.D.is_zero());
}

TEST_CASE("hankel realization of inv(1 - z1 - z2) with bound 1") {
    TruncSeries s = expand(parse("inv(1 - z1 - z2)", 2), 3);
    FmRealization r = hankel_realize(s, 1);
    CHECK(r.m == 1);
    CHECK(fm_series(r, 6).coeff(Word({1, 2, 1})) == Mat::identity(1));
    CHECK(r.D == Mat::identity(1));
}

TEST_CASE("hankel realization enforces its preconditions") {
    TruncSeries s = expand(parse("inv(1 - z1 - z2)", 2), 3);
    CHECK_THROWS_AS(hankel_realize(s, 2), InsufficientOrder);
    // a series needing dimension 2 cannot be matched with bound 1
    TruncSeries s2 = expand(parse("z1*z2", 2), 5);
    CHECK_THROWS_AS(hankel_realize(s2, 1), RankMismatch);
}

TEST_CASE("hankel realization handles matrix-valued series") {
    RatExpr e = parse("[[inv(1 - z1), z2]]", 2);
    FmRealization mini = minimize(realize(e));
    CHECK(mini.m == 2);
    FmRealization h = hankel_realize(expand(e, 2 * mini.m + 1), mini.m);
    CHECK(h.m == mini.m);
    CHECK(fm_series(h, 6) == expand(e, 6));
    CHECK(similarity(h, mini).has_value());
}

TEST_CASE("similarity on identical realizations is the identity") {
    FmRealization mini = minimize(realize(corpus::matrix_r1()));
    auto s = similarity(mini, mini);
    REQUIRE(s.has_value());
    CHECK(*s == Mat::identity(mini.m));
}

TEST_CASE("similarity recovers an explicit conjugation") {
    Rng rng(33);
    int done = 0;
    while (done < 10) {
        FmRealization r = random_realization(rng, 2, 1, 1, 2);
        FmRealization mini = minimize(r);
        if (mini.m == 0) continue;
        Mat s0 = random_mat(rng, mini.m, mini.m, 3);
        if (exact_det(s0) == 0) continue;
        Mat s0i = inverse(s0);
        FmRealization conj = mini;
        for (int j = 0; j < 2; ++j) {
            conj.A[static_cast<std::size_t>(j)] = s0 * mini.A[static_cast<std::size_t>(j)] * s0i;
            conj.B[static_cast<std::size_t>(j)] = s0 * mini.B[static_cast<std::size_t>(j)];
        }
        conj.C = mini.C * s0i;
        auto s = similarity(mini, conj);
        REQUIRE(s.has_value());
        CHECK(*s == s0);
        ++done;
    }
}

TEST_CASE("similarity rejects different functions and non-minimal inputs") {
    FmRealization a = minimize(realize(parse("inv(1 - z1)", 2)));
    FmRealization b = minimize(realize(parse("inv(1 - z2)", 2)));
    CHECK(!similarity(a, b).has_value());
    FmRealization c = minimize(realize(parse("1 + z1", 2)));
    FmRealization d = minimize(realize(parse("2 + z1", 2)));
    CHECK(!similarity(c, d).has_value());  // D mismatch
    FmRealization fat = realize(corpus::matrix_r1());  // dimension 4, not minimal
    CHECK_THROWS_AS(similarity(fat, fat), NotMinimal);
}

TEST_CASE("pencil check matches the defining determinant") {
    FmRealization mini = minimize(realize(corpus::matrix_r1()));
    Rng rng(34);
    for (int k = 0; k < 40; ++k) {
        int n = 2 + static_cast<int>(rng.int_in(0, 1));
        EvalPoint z(2, n, {random_mat(rng, n, n, 4), random_mat(rng, n, n, 4)});
        Mat in = Mat::identity(n);
        Mat direct =
            assemble_blocks({{in - z.mats[0], -z.mats[1]}, {-z.mats[1], in - z.mats[0]}});
        CHECK(pencil_domain_check(mini, z) == (exact_det(direct) != 0));
    }
    CHECK(pencil_domain_check(FmRealization::constant(2, Mat::identity(1)),
                              zero_point(2, 3)));
}

TEST_CASE("pencil-regular points admit evaluation of the transfer expression") {
    Rng rng(35);
    int done = 0;
    std::uint64_t seed = 3500;
    while (done < 15) {
        ++seed;
        RatExpr e = random_regular(seed, 2);
        FmRealization mini = minimize(realize(e));
        EvalPoint z(2, 2, {random_mat(rng, 2, 2, 3), random_mat(rng, 2, 2, 3)});
        bool regular = pencil_domain_check(mini, z);
        CHECK(regular == in_domain(transfer_expr(mini), z));
        if (in_domain(e, z)) {
            CHECK(regular);  // dom of any representative sits inside the pencil set
            CHECK(evaluate(transfer_expr(mini), z) == evaluate(e, z));
        }
        ++done;
    }
}
