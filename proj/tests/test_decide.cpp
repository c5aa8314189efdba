#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncrat/corpus.hpp"
#include "ncrat/decide.hpp"
#include "ncrat/errors.hpp"
#include "ncrat/eval.hpp"
#include "ncrat/parser.hpp"
#include "ncrat/random_expr.hpp"

using namespace ncrat;

TEST_CASE("the sampled pair r1 ~ r2 is equivalent with sizes 2 and 3 only") {
    Verdict v = equivalent(corpus::pair_r1(), corpus::pair_r2());
    CHECK(v.kind == VerdictKind::EquivalentSampled);
    REQUIRE(v.stats.has_value());
    CHECK(v.stats->sizes == std::vector<int>{1, 2, 3});
    CHECK(v.stats->common_per_size[0] == 0);
    CHECK(v.stats->common_per_size[1] > 0);
    CHECK(v.stats->common_per_size[2] > 0);
}

TEST_CASE("pencil form and Schur form are exactly equivalent") {
    Verdict v = equivalent(corpus::matrix_r1(), corpus::schur_r2());
    CHECK(v.kind == VerdictKind::EquivalentExact);
}

TEST_CASE("pencil form and the second scalar form are equivalent in the sampled grade") {
    Verdict v = equivalent(corpus::matrix_r1(), corpus::schur_r3());
    CHECK(v.kind == VerdictKind::EquivalentSampled);
}

TEST_CASE("noncommuting monomials separate with a 2x2 witness") {
    RatExpr a = parse("z1*z2", 2), b = parse("z2*z1", 2);
    Verdict v = equivalent(a, b);
    CHECK(v.kind == VerdictKind::NotEquivalent);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->n == 2);
    CHECK(evaluate(a, *v.witness) != evaluate(b, *v.witness));
}

TEST_CASE("equivalence requires matching shapes") {
    CHECK_THROWS_AS(equivalent(parse("z1", 2), parse("[[z1, z2]]", 2)), ShapeError);
}

TEST_CASE("verdicts are deterministic given the seed") {
    DecidePolicy policy;
    policy.seed = 12345;
    Verdict v1 = equivalent(corpus::pair_r1(), corpus::pair_r2(), policy);
    Verdict v2 = equivalent(corpus::pair_r1(), corpus::pair_r2(), policy);
    CHECK(v1.kind == v2.kind);
    REQUIRE((v1.stats && v2.stats));
    CHECK(v1.stats->common_per_size == v2.stats->common_per_size);
}

TEST_CASE("zero tests on the opening corpus") {
    CHECK(is_zero(parse("z1 - z1", 2)).kind == VerdictKind::ZeroExact);
    CHECK(is_zero(parse("0", 2)).kind == VerdictKind::ZeroExact);
    Verdict v = is_zero(parse("-1 + inv(z1) * z1", 2));
    CHECK(v.kind == VerdictKind::EquivalentSampled);
    REQUIRE(v.stats.has_value());
    CHECK(v.stats->total_common() >= 10);
}

TEST_CASE("commutator needs size 2") {
    Verdict v = is_zero(corpus::commutator());
    CHECK(v.kind == VerdictKind::NonzeroExact);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->n == 2);
    CHECK(!evaluate(corpus::commutator(), *v.witness).is_zero());
}

TEST_CASE("alternating polynomial needs size 3 even under a tight policy") {
    DecidePolicy policy;
    policy.max_size = 1;
    Verdict v = is_zero(corpus::alternating_s3(), policy);
    CHECK(v.kind == VerdictKind::NonzeroExact);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->n == 3);
}

TEST_CASE("regular-at-zero zero tests go through realizations") {
    // a disguised zero: pencil form minus its Schur form
    RatExpr diff = sub(corpus::matrix_r1(), corpus::schur_r2());
    CHECK(is_zero(diff).kind == VerdictKind::ZeroExact);
    // a disguised nonzero with D = 0
    RatExpr e = parse("z1 + z1*z2 - z1", 2);
    Verdict v = is_zero(e);
    CHECK(v.kind == VerdictKind::NonzeroExact);
    REQUIRE(v.witness.has_value());
    CHECK(!evaluate(e, *v.witness).is_zero());
    // nonzero constant term gives the zero-point witness
    Verdict vc = is_zero(parse("2 + z1", 2));
    CHECK(vc.kind == VerdictKind::NonzeroExact);
    CHECK(vc.witness->n == 1);
}

TEST_CASE("matrix-valued zero tests work through block expressions") {
    CHECK(is_zero(parse("[[z1 - z1, 0], [0, z2 - z2]]", 2)).kind == VerdictKind::ZeroExact);
    Verdict v = is_zero(parse("[[0, z1*z2 - z2*z1]]", 2));
    CHECK(v.kind == VerdictKind::NonzeroExact);
    REQUIRE(v.witness.has_value());
    CHECK(!evaluate(parse("[[0, z1*z2 - z2*z1]]", 2), *v.witness).is_zero());
}

TEST_CASE("polynomial zero test agrees with the coefficient map on random polynomials") {
    int done = 0;
    std::uint64_t seed = 6000;
    while (done < 200) {
        ++seed;
        RatExpr e = random_expr(seed, 2, 0);  // a polynomial leaf
        Verdict v = is_zero(e);
        if (e.poly().is_zero())
            CHECK(v.kind == VerdictKind::ZeroExact);
        else {
            CHECK(v.kind == VerdictKind::NonzeroExact);
            REQUIRE(v.witness.has_value());
            CHECK(!evaluate(e, *v.witness).is_zero());
        }
        ++done;
    }
}

TEST_CASE("disguises of one function stay exactly equivalent") {
    int done = 0;
    std::uint64_t seed = 7000;
    while (done < 10) {
        ++seed;
        GenOptions opt;
        opt.require_regular_at_zero = true;
        opt.depth = 2;
        RatExpr e = random_expr(seed, opt);
        RatExpr p = random_expr(seed * 7 + 1, 2, 0);
        RatExpr disguised = make_mul(sub(make_add(e, p), p),
                                     make_inv(one_expr(2), MultiPoint{zero_point(2, 1)}));
        CHECK(equivalent(e, disguised).kind == VerdictKind::EquivalentExact);
        Verdict bumped = equivalent(e, make_add(disguised, var_expr(2, 1)));
        CHECK(bumped.kind == VerdictKind::NotEquivalent);
        REQUIRE(bumped.witness.has_value());
        ++done;
    }
}

TEST_CASE("exact and sampled routes never contradict on regular pairs") {
    int done = 0;
    std::uint64_t seed = 6600;
    while (done < 15) {
        ++seed;
        GenOptions opt;
        opt.require_regular_at_zero = true;
        opt.depth = 2;
        RatExpr a = random_expr(seed * 2, opt);
        RatExpr b = random_expr(seed * 2 + 1, opt);
        Verdict exact = equivalent(a, b);
        CHECK((exact.kind == VerdictKind::EquivalentExact ||
               exact.kind == VerdictKind::NotEquivalent));
        // sampling the same pair must not disagree with the exact verdict
        DecidePolicy policy;
        policy.samples_per_size = 10;
        Rng rng(policy.seed);
        bool sampled_disagreement = false;
        for (int n = 1; n <= 2 && !sampled_disagreement; ++n)
            for (int k = 0; k < policy.samples_per_size; ++k) {
                EvalPoint pt = sample_point(2, n, 4, rng);
                if (!in_domain(a, pt) || !in_domain(b, pt)) continue;
                if (evaluate(a, pt) != evaluate(b, pt)) {
                    sampled_disagreement = true;
                    break;
                }
            }
        if (exact.kind == VerdictKind::EquivalentExact) CHECK(!sampled_disagreement);
        ++done;
    }
}
