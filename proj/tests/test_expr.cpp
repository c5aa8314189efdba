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

TEST_CASE("commutator parses to a single polynomial leaf") {
    RatExpr e = parse("z1*z2 - z2*z1", 2);
    REQUIRE(e.is_poly());
    const MatPoly& p = e.poly();
    CHECK(p.terms().size() == 2);
    CHECK(p.coeff(Word({1, 2})) == Mat::identity(1));
    CHECK(p.coeff(Word({2, 1})) == -Mat::identity(1));
}

TEST_CASE("inv of the commutator is an Inv node with a witness") {
    RatExpr e = parse("inv(z1*z2 - z2*z1)", 2);
    REQUIRE(e.kind() == NodeKind::Inv);
    CHECK(e.inner().is_poly());
    REQUIRE(e.inv_witness().has_value());
    // the witness must actually certify invertibility, and cannot be scalar
    const EvalPoint& w = e.inv_witness()->front();
    CHECK(w.n >= 2);
    CHECK(exact_det(evaluate(e.inner(), w)) != 0);
}

TEST_CASE("matrix literals become Block nodes of scalar polynomials") {
    RatExpr e = parse("[[1 - z1, -z2], [-z2, 1 - z1]]", 2);
    REQUIRE(e.kind() == NodeKind::Block);
    CHECK(e.rows() == 2);
    CHECK(e.cols() == 2);
    CHECK(e.grid_rows() == 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(e.cell(i, j).is_poly());
    CHECK(e.cell(0, 1).poly().coeff(Word({2})) == -Mat::identity(1));
}

TEST_CASE("powers and unary minus are sugar") {
    CHECK(structurally_equal(parse("z1^3", 2), parse("z1*z1*z1", 2)));
    CHECK(structurally_equal(parse("-z1 + 2", 2), parse("2 - z1", 2)));
    CHECK(structurally_equal(parse("1/2*z1", 2), parse("z1 - 1/2*z1", 2)));
}

TEST_CASE("syntax errors carry position and expectation") {
    CHECK_THROWS_AS(parse("z1 + ", 2), SyntaxError);
    CHECK_THROWS_AS(parse("inv z1", 2), SyntaxError);
    CHECK_THROWS_AS(parse("z3", 2), SyntaxError);
    CHECK_THROWS_AS(parse("[[z1, z2]", 2), SyntaxError);
    try {
        parse("z1 + @", 2);
        CHECK(false);
    } catch (const SyntaxError& ex) {
        CHECK(ex.pos == 5);
    }
}

TEST_CASE("shape errors reject malformed operations") {
    CHECK_THROWS_AS(parse("[[z1, z2]] + z1", 2), ShapeError);
    CHECK_THROWS_AS(parse("inv([[z1, z2]])", 2), ShapeError);
    CHECK_THROWS_AS(parse("z1 * [[z1], [z2]]", 2), ShapeError);
    CHECK_THROWS_AS(parse("[[z1, z2], [z1]]", 2), ShapeError);
}

TEST_CASE("nowhere-invertible inverses are rejected") {
    CHECK_THROWS_AS(parse("inv(z1 - z1)", 2), DegenerateInverse);
}

TEST_CASE("format round-trips the worked examples") {
    for (const RatExpr& e : {corpus::matrix_r1(), corpus::schur_r2(), corpus::schur_r3(),
                             corpus::pair_r1(), corpus::worked_poly()}) {
        RatExpr back = parse(format(e), 2);
        CHECK(structurally_equal(normalize_poly_blocks(back), normalize_poly_blocks(e)));
    }
}

TEST_CASE("format round-trips 100 seeded random expressions") {
    int done = 0;
    std::uint64_t seed = 1000;
    while (done < 100) {
        ++seed;
        GenOptions opt;
        opt.depth = 3;
        opt.rows = 1 + static_cast<int>(seed % 2);
        opt.cols = 1 + static_cast<int>(seed % 2);
        RatExpr e;
        try {
            e = random_expr(seed, opt);
        } catch (const GenerationFailed&) {
            continue;
        }
        RatExpr back = parse(format(e), 2);
        CHECK(structurally_equal(normalize_poly_blocks(back), normalize_poly_blocks(e)));
        ++done;
    }
}

TEST_CASE("generator is deterministic in the seed") {
    GenOptions opt;
    opt.depth = 4;
    RatExpr a = random_expr(7, opt), b = random_expr(7, opt), c = random_expr(8, opt);
    CHECK(structurally_equal(a, b));
    CHECK(!structurally_equal(a, c));
}

TEST_CASE("generated expressions have nonempty sampled domains") {
    Rng rng(99);
    int done = 0;
    std::uint64_t seed = 5000;
    while (done < 1000) {
        ++seed;
        RatExpr e;
        try {
            e = random_expr(seed, 2, 3);
        } catch (const GenerationFailed&) {
            continue;
        }
        bool found = false;
        for (int t = 0; t < 60 && !found; ++t) {
            int n = 1 + static_cast<int>(rng.int_in(0, 2));
            std::vector<Mat> mats;
            for (int j = 0; j < 2; ++j) {
                Mat m(n, n);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) m.at(a, b) = rng.rational_in(-4, 4);
                mats.push_back(std::move(m));
            }
            found = in_domain(e, EvalPoint(2, n, std::move(mats)));
        }
        CHECK(found);
        ++done;
    }
}

TEST_CASE("polynomial arithmetic matches evaluation") {
    Rng rng(11);
    for (int k = 0; k < 50; ++k) {
        RatExpr pe = random_expr(200 + k, 2, 0);
        RatExpr qe = random_expr(300 + k, 2, 0);
        const MatPoly& p = pe.poly();
        const MatPoly& q = qe.poly();
        Mat z1(2, 2), z2(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                z1.at(i, j) = rng.rational_in(-4, 4);
                z2.at(i, j) = rng.rational_in(-4, 4);
            }
        EvalPoint z(2, 2, {z1, z2});
        CHECK(evaluate(poly_expr(p * q), z) == evaluate(poly_expr(p), z) * evaluate(poly_expr(q), z));
        CHECK(evaluate(poly_expr(p + q), z) ==
              evaluate(poly_expr(p), z) + evaluate(poly_expr(q), z));
    }
}

TEST_CASE("block cells must share one shape") {
    RatExpr a = parse("z1", 2), b = parse("[[z1, z2]]", 2);
    CHECK_THROWS_AS(make_block({{a, b}}), ShapeError);
}
