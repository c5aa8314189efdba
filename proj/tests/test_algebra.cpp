#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncrat/errors.hpp"
#include "ncrat/linalg.hpp"
#include "ncrat/matrix.hpp"
#include "ncrat/rng.hpp"
#include "ncrat/word.hpp"

using namespace ncrat;

namespace {

Mat random_mat(Rng& rng, int rows, int cols, long range = 9) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational_in(-range, range);
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
    Rng rng(1);
    for (int k = 0; k < 200; ++k) {
        Rational a(rng.int_in(-50, 50), rng.int_in(1, 50));
        Rational b(rng.int_in(-50, 50), rng.int_in(1, 50));
        a.canonicalize();
        b.canonicalize();
        CHECK((a + b) - b == a);
        if (b != 0) CHECK((a / b) * b == a);
    }
    CHECK(rat_from_string("-3/6") == rat(-1, 2));
    CHECK(rat_to_string(rat(4, 6)) == "2/3");
    CHECK(rat_to_string(rat(-7)) == "-7");
}

TEST_CASE("kron identity and scalar cases") {
    CHECK(kron(Mat::identity(2), Mat::identity(3)) == Mat::identity(6));
    Mat two(1, 1);
    two.at(0, 0) = 2;
    Rng rng(2);
    Mat b = random_mat(rng, 3, 2);
    CHECK(kron(two, b) == b * Rational(2));
}

TEST_CASE("kron mixed product on 1000 seeded instances") {
    Rng rng(3);
    for (int k = 0; k < 1000; ++k) {
        Mat a = random_mat(rng, 2, 2, 4), c = random_mat(rng, 2, 2, 4);
        Mat b = random_mat(rng, 3, 3, 4), d = random_mat(rng, 3, 3, 4);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
}

TEST_CASE("kron associativity under the flat identification") {
    Rng rng(4);
    Mat a = random_mat(rng, 2, 3), b = random_mat(rng, 3, 2), c = random_mat(rng, 2, 2);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
}

TEST_CASE("commutation matrix degenerate and 2x2 cases") {
    CHECK(commutation_matrix(1, 5) == Mat::identity(5));
    CHECK(commutation_matrix(5, 1) == Mat::identity(5));
    // P(2,2) swaps the middle rows of the 4-dimensional space
    Mat p22 = commutation_matrix(2, 2);
    Mat expected = Mat::from_int_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    CHECK(p22 == expected);
}

TEST_CASE("commutation matrix reorders tensor factors") {
    Rng rng(5);
    for (int k = 0; k < 50; ++k) {
        Mat a = random_mat(rng, 2, 3), b = random_mat(rng, 2, 2);
        // A (x) B = P(n,p) (B (x) A) P(m,q)^T with A n x m, B p x q
        Mat lhs = kron(a, b);
        Mat rhs = commutation_matrix(2, 2) * kron(b, a) * commutation_matrix(3, 2).transpose();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("commutation matrices are permutations with the stated inverses") {
    for (int p = 1; p <= 4; ++p)
        for (int n = 1; n <= 4; ++n) {
            Mat pm = commutation_matrix(p, n);
            int ones = 0;
            for (int i = 0; i < pm.rows(); ++i)
                for (int j = 0; j < pm.cols(); ++j) {
                    CHECK((pm.at(i, j) == 0 || pm.at(i, j) == 1));
                    if (pm.at(i, j) == 1) ++ones;
                }
            CHECK(ones == p * n);
            CHECK(pm * pm.transpose() == Mat::identity(p * n));
            CHECK(pm.transpose() == commutation_matrix(n, p));
        }
}

TEST_CASE("word concatenation and reversal") {
    Word u({1, 2}), v({2});
    CHECK(Word::empty().concat(u) == u);
    CHECK(u.concat(v) == Word({1, 2, 2}));
    CHECK(Word({1, 2, 2}).reversed() == Word({2, 2, 1}));
    CHECK(Word::empty().reversed() == Word::empty());
    CHECK(u.splittings().size() == 3);
}

TEST_CASE("deglex enumeration") {
    auto words = words_up_to(2, 2);
    REQUIRE(words.size() == 7);
    CHECK(words[0] == Word::empty());
    CHECK(words[1] == Word({1}));
    CHECK(words[2] == Word({2}));
    CHECK(words[3] == Word({1, 1}));
    CHECK(words[6] == Word({2, 2}));
    CHECK(deglex_less(Word({2}), Word({1, 1})));
    CHECK(!deglex_less(Word({1, 2}), Word({1, 1})));
}

TEST_CASE("exact rank, determinant, inverse") {
    Mat a = Mat::from_int_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK(exact_rank(a) == 2);
    CHECK(exact_det(a) == 0);
    Mat b = Mat::from_int_rows({{2, 1}, {7, 4}});
    CHECK(exact_det(b) == 1);
    CHECK(inverse(b) * b == Mat::identity(2));
    CHECK_THROWS_AS(inverse(a), SingularMatrix);

    Rng rng(6);
    for (int k = 0; k < 50; ++k) {
        Mat m = random_mat(rng, 3, 3, 6);
        Rational det = exact_det(m);
        if (det != 0) {
            CHECK(exact_rank(m) == 3);
            CHECK(m * inverse(m) == Mat::identity(3));
        } else {
            CHECK(exact_rank(m) < 3);
        }
    }
}

TEST_CASE("determinant multiplicativity with fractional entries") {
    Rng rng(7);
    for (int k = 0; k < 30; ++k) {
        Mat a(3, 3), b(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                a.at(i, j) = Rational(rng.int_in(-5, 5), rng.int_in(1, 4));
                b.at(i, j) = Rational(rng.int_in(-5, 5), rng.int_in(1, 4));
                a.at(i, j).canonicalize();
                b.at(i, j).canonicalize();
            }
        CHECK(exact_det(a * b) == exact_det(a) * exact_det(b));
    }
}

TEST_CASE("rank factorization and solvers") {
    Rng rng(8);
    for (int k = 0; k < 30; ++k) {
        Mat m = random_mat(rng, 3, 4, 3);
        RankFactorization rf = rank_factor(m);
        CHECK(rf.left * rf.right == m);
        CHECK(exact_rank(m) == rf.left.cols());
    }
    Mat a = Mat::from_int_rows({{1, 2}, {2, 4}});
    Mat b = Mat::from_int_rows({{3}, {6}});
    auto x = solve_right(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    Mat bad = Mat::from_int_rows({{3}, {7}});
    CHECK(!solve_right(a, bad).has_value());
    Mat ker = kernel_basis(a);
    CHECK(ker.cols() == 1);
    CHECK((a * ker).is_zero());
}
