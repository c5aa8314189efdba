#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncrat/corpus.hpp"
#include "ncrat/errors.hpp"
#include "ncrat/eval.hpp"
#include "ncrat/linalg.hpp"
#include "ncrat/parser.hpp"
#include "ncrat/random_expr.hpp"
#include "ncrat/rng.hpp"

using namespace ncrat;

namespace {

Mat random_mat(Rng& rng, int rows, int cols, long range = 4) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational_in(-range, range);
    return m;
}

EvalPoint random_point(Rng& rng, int d, int n, long range = 4) {
    std::vector<Mat> mats;
    for (int j = 0; j < d; ++j) mats.push_back(random_mat(rng, n, n, range));
    return EvalPoint(d, n, std::move(mats));
}

}  // namespace

TEST_CASE("coordinate expressions evaluate to the point matrices") {
    Rng rng(1);
    EvalPoint z = random_point(rng, 2, 3);
    CHECK(evaluate(parse("z1", 2), z) == z.mats[0]);
    CHECK(evaluate(parse("z2", 2), z) == z.mats[1]);
}

TEST_CASE("commutator inverse has no scalar points") {
    RatExpr e = parse("inv(z1*z2 - z2*z1)", 2);
    Rng rng(2);
    for (int k = 0; k < 20; ++k)
        CHECK_THROWS_AS(evaluate(e, random_point(rng, 2, 1, 9)), NotInDomain);
}

TEST_CASE("the equivalent pair r1, r2 agrees on 50 seeded 2x2 points") {
    RatExpr r1 = corpus::pair_r1(), r2 = corpus::pair_r2();
    Rng rng(3);
    int agreed = 0;
    while (agreed < 50) {
        EvalPoint z = random_point(rng, 2, 2, 9);
        if (!in_domain(r1, z) || !in_domain(r2, z)) continue;
        CHECK(evaluate(r1, z) == evaluate(r2, z));
        ++agreed;
    }
}

TEST_CASE("evaluation is a homomorphism for add, mul, inv and block") {
    Rng rng(4);
    for (int k = 0; k < 40; ++k) {
        RatExpr a, b;
        try {
            a = random_expr(400 + k, 2, 2);
            b = random_expr(500 + k, 2, 2);
        } catch (const GenerationFailed&) {
            continue;
        }
        EvalPoint z = random_point(rng, 2, 2);
        if (!in_domain(a, z) || !in_domain(b, z)) continue;
        CHECK(evaluate(make_add(a, b), z) == evaluate(a, z) + evaluate(b, z));
        CHECK(evaluate(make_mul(a, b), z) == evaluate(a, z) * evaluate(b, z));
        Mat block_value = evaluate(make_block({{a, b}}), z);
        CHECK(block_value.block(0, 0, z.n, z.n) == evaluate(a, z));
        CHECK(block_value.block(0, z.n, z.n, z.n) == evaluate(b, z));
        Mat va = evaluate(a, z);
        if (exact_det(va) != 0) CHECK(evaluate(make_inv(a), z) == inverse(va));
    }
}

TEST_CASE("tensor values land in the canonical coefficient-first layout") {
    Rng rng(5);
    RatExpr t = make_tensor(parse("z1", 2), parse("z1", 2));
    for (int k = 0; k < 10; ++k) {
        EvalPoint z = random_point(rng, 2, 2), zp = random_point(rng, 2, 3);
        TensorValue v = evaluate_multi(t, {z, zp});
        CHECK(v.data == kron(z.mats[0], zp.mats[0]));  // scalar coefficients: plain kron
        REQUIRE(v.sizes.size() == 2);
        CHECK(v.sizes[0] == 2);
        CHECK(v.sizes[1] == 3);
    }
    // matrix-valued factors: the coefficient factors merge in front
    RatExpr row = parse("[[z1, z2]]", 2);
    RatExpr tt = make_tensor(row, row);
    EvalPoint z = random_point(rng, 2, 2), zp = random_point(rng, 2, 2);
    TensorValue v = evaluate_multi(tt, {z, zp});
    CHECK(v.rows == 1);
    CHECK(v.cols == 4);
    // column block (j1, j2) must be Z_{j1} (x) Z'_{j2}
    for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2)
            CHECK(v.data.block(0, (j1 * 2 + j2) * 4, 4, 4) ==
                  kron(z.mats[static_cast<std::size_t>(j1)],
                       zp.mats[static_cast<std::size_t>(j2)]));
}

TEST_CASE("iota of a constant inflates by an identity factor") {
    Mat c = Mat::from_int_rows({{2, -1}, {0, 3}});
    RatExpr e = make_iota(const_expr(2, c));
    Rng rng(6);
    EvalPoint z = random_point(rng, 2, 2), zp = random_point(rng, 2, 3);
    TensorValue v = evaluate_multi(e, {z, zp});
    CHECK(v.data == kron(kron(c, Mat::identity(2)), Mat::identity(3)));
}

TEST_CASE("iota inflates an arity-1 value by an identity factor in front") {
    Rng rng(60);
    int done = 0;
    std::uint64_t seed = 6000;
    while (done < 15) {
        ++seed;
        RatExpr e;
        try {
            e = random_expr(seed, 2, 2, 1 + static_cast<int>(seed % 2), 1);
        } catch (const GenerationFailed&) {
            continue;
        }
        EvalPoint z = random_point(rng, 2, 2), zp = random_point(rng, 2, 3);
        if (!in_domain(e, z)) continue;
        Mat v = evaluate(e, z);
        Mat inflated = reorder_axes(kron(v, Mat::identity(zp.n)), {e.rows(), z.n, zp.n},
                                    {e.cols(), z.n, zp.n}, {0, 2, 1});
        CHECK(evaluate_multi(make_iota(e), {zp, z}).data == inflated);
        ++done;
    }
}

TEST_CASE("iota respects products and inverses under evaluation") {
    Rng rng(7);
    int done = 0;
    std::uint64_t seed = 700;
    while (done < 20) {
        ++seed;
        RatExpr a, b;
        try {
            a = random_expr(seed * 2, 2, 2);
            b = random_expr(seed * 2 + 1, 2, 2);
        } catch (const GenerationFailed&) {
            continue;
        }
        MultiPoint pts{random_point(rng, 2, 2), random_point(rng, 2, 2)};
        RatExpr lhs = make_iota(make_mul(a, b));
        RatExpr rhs = make_mul(make_iota(a), make_iota(b));
        if (!in_domain(lhs, pts)) continue;
        CHECK(evaluate_multi(lhs, pts).data == evaluate_multi(rhs, pts).data);
        Mat va = evaluate(a, pts[1]);
        if (exact_det(va) != 0)
            CHECK(evaluate_multi(make_iota(make_inv(a)), pts).data ==
                  evaluate_multi(make_inv(make_iota(a)), pts).data);
        ++done;
    }
}

TEST_CASE("multi-tuple product rule matches flat matrix products") {
    Rng rng(8);
    RatExpr a = make_tensor(parse("z1 + 1", 2), parse("z2", 2));
    RatExpr b = make_tensor(parse("z2", 2), parse("z1 - 2", 2));
    for (int k = 0; k < 10; ++k) {
        MultiPoint pts{random_point(rng, 2, 2), random_point(rng, 2, 3)};
        CHECK(evaluate_multi(make_mul(a, b), pts).data ==
              evaluate_multi(a, pts).data * evaluate_multi(b, pts).data);
    }
}

TEST_CASE("contract applies the encoded multilinear map") {
    Rng rng(9);
    for (int k = 0; k < 20; ++k) {
        Mat a = random_mat(rng, 2, 2), b = random_mat(rng, 2, 2), h = random_mat(rng, 2, 2);
        Mat c = random_mat(rng, 2, 2), d = random_mat(rng, 2, 2);
        TensorValue v;
        v.rows = 1;
        v.cols = 1;
        v.sizes = {2, 2};
        v.data = kron(a, b);
        CHECK(contract(v, {h}) == a * h * b);
        v.data = kron(a, b) + kron(c, d);
        CHECK(contract(v, {h}) == a * h * b + c * h * d);
        // identity direction on A (x) I collapses to A
        v.data = kron(a, Mat::identity(2));
        CHECK(contract(v, {Mat::identity(2)}) == a);
    }
}

TEST_CASE("contract is linear in the value and in each direction") {
    Rng rng(10);
    Mat a = random_mat(rng, 3, 3), b = random_mat(rng, 2, 2), c = random_mat(rng, 3, 3),
        d = random_mat(rng, 2, 2);
    Mat h1 = random_mat(rng, 3, 2), h2 = random_mat(rng, 3, 2);
    TensorValue v;
    v.rows = 1;
    v.cols = 1;
    v.sizes = {3, 2};
    v.data = kron(a, b);
    TensorValue w = v;
    w.data = kron(c, d);
    TensorValue sum = v;
    sum.data = v.data + w.data;
    CHECK(contract(sum, {h1}) == contract(v, {h1}) + contract(w, {h1}));
    Mat both = contract(v, {h1 + h2});
    CHECK(both == contract(v, {h1}) + contract(v, {h2}));
}

TEST_CASE("three-factor contraction matches the chained product") {
    Rng rng(11);
    Mat a = random_mat(rng, 2, 2), b = random_mat(rng, 3, 3), c = random_mat(rng, 2, 2);
    Mat h1 = random_mat(rng, 2, 3), h2 = random_mat(rng, 3, 2);
    TensorValue v;
    v.rows = 1;
    v.cols = 1;
    v.sizes = {2, 3, 2};
    v.data = kron(kron(a, b), c);
    CHECK(contract(v, {h1, h2}) == a * h1 * b * h2 * c);
}

TEST_CASE("direct sums evaluate blockwise after conjugation") {
    Rng rng(12);
    int done = 0;
    std::uint64_t seed = 1200;
    while (done < 20) {
        ++seed;
        RatExpr e;
        try {
            e = random_expr(seed, 2, 2, 1 + static_cast<int>(seed % 2), 1);
        } catch (const GenerationFailed&) {
            continue;
        }
        EvalPoint z = random_point(rng, 2, 2), zp = random_point(rng, 2, 2);
        if (!in_domain(e, z) || !in_domain(e, zp)) continue;
        EvalPoint both = direct_sum(z, zp);
        int p = e.rows(), q = e.cols(), n = z.n, np = zp.n;
        Mat big = commutation_matrix(n + np, p) * evaluate(e, both) *
                  commutation_matrix(n + np, q).transpose();
        Mat top = commutation_matrix(n, p) * evaluate(e, z) * commutation_matrix(n, q).transpose();
        Mat bot =
            commutation_matrix(np, p) * evaluate(e, zp) * commutation_matrix(np, q).transpose();
        CHECK(big.block(0, 0, n * p, n * q) == top);
        CHECK(big.block(n * p, n * q, np * p, np * q) == bot);
        CHECK(big.block(0, n * q, n * p, np * q).is_zero());
        CHECK(big.block(n * p, 0, np * p, n * q).is_zero());
        ++done;
    }
}

TEST_CASE("reorder_axes agrees with commutation-matrix conjugation") {
    Rng rng(13);
    Mat a = random_mat(rng, 2, 3), b = random_mat(rng, 4, 2);
    Mat swapped = reorder_axes(kron(a, b), {2, 4}, {3, 2}, {1, 0});
    CHECK(swapped == kron(b, a));
    CHECK(swapped ==
          commutation_matrix(2, 4).transpose() * kron(a, b) * commutation_matrix(3, 2));
}

TEST_CASE("NotInDomain reports the failing path") {
    RatExpr e = parse("z1 * inv(z2) + inv(1 + z1*z1)", 2);
    EvalPoint z(2, 1, {Mat::from_int_rows({{3}}), Mat::from_int_rows({{0}})});
    try {
        evaluate(e, z);
        CHECK(false);
    } catch (const NotInDomain& ex) {
        CHECK(ex.path.find("inv") != std::string::npos);
        CHECK(ex.n == 1);
    }
}
