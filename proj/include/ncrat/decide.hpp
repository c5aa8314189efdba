#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncrat/expr.hpp"
#include "ncrat/point.hpp"
#include "ncrat/rng.hpp"

namespace ncrat {

enum class VerdictKind {
    EquivalentExact,
    EquivalentSampled,
    NotEquivalent,
    ZeroExact,
    NonzeroExact,
    Inconclusive,
};

struct SampleStats {
    std::vector<int> sizes;
    int samples_per_size = 0;
    std::vector<int> common_per_size;  // points that landed in both domains
    std::uint64_t seed = 0;
    int total_common() const {
        int t = 0;
        for (int c : common_per_size) t += c;
        return t;
    }
};

/// Outcome of an equivalence or zero test. NotEquivalent and NonzeroExact
/// carry a concrete witness point that reproduces the disagreement.
struct Verdict {
    VerdictKind kind;
    std::optional<EvalPoint> witness;
    std::optional<SampleStats> stats;
    std::string note;

    bool is_exact() const {
        return kind == VerdictKind::EquivalentExact || kind == VerdictKind::NotEquivalent ||
               kind == VerdictKind::ZeroExact || kind == VerdictKind::NonzeroExact;
    }
};

std::string verdict_kind_name(VerdictKind kind);

struct DecidePolicy {
    int max_size = 3;
    int samples_per_size = 40;
    long entry_range = 9;     // entries uniform in [-range, range]
    std::uint64_t seed = 0;
    int min_common = 10;      // sampled verdicts need this many common-domain hits
};

/// Equivalence of two arity-1 expressions of equal shape. Expressions regular
/// at zero are decided exactly through minimal realizations (series agreement
/// up to length m1+m2); everything else is decided by seeded sampling.
Verdict equivalent(const RatExpr& e1, const RatExpr& e2, const DecidePolicy& policy = {});

/// Zero test. Polynomials are exact by their coefficient map (with the
/// witness search sized by the degree bound: a nonzero polynomial of degree
/// 2n can vanish on all tuples of size <= n). Regular-at-zero expressions are
/// exact via minimize. Everything else is sampled; an all-zero sample yields
/// the sampled-grade equivalence verdict.
Verdict is_zero(const RatExpr& e, const DecidePolicy& policy = {});

/// Deterministic sample stream used by the sampled routes (exposed so tests
/// and the CLI can reproduce witnesses).
EvalPoint sample_point(int d, int n, long range, Rng& rng);

}  // namespace ncrat
