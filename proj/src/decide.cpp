#include "ncrat/decide.hpp"

#include "ncrat/errors.hpp"
#include "ncrat/eval.hpp"
#include "ncrat/realize.hpp"

namespace ncrat {

std::string verdict_kind_name(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::EquivalentExact: return "EquivalentExact";
        case VerdictKind::EquivalentSampled: return "EquivalentSampled";
        case VerdictKind::NotEquivalent: return "NotEquivalent";
        case VerdictKind::ZeroExact: return "ZeroExact";
        case VerdictKind::NonzeroExact: return "NonzeroExact";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

EvalPoint sample_point(int d, int n, long range, Rng& rng) {
    std::vector<Mat> mats;
    for (int j = 0; j < d; ++j) {
        Mat m(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) m.at(a, b) = rng.rational_in(-range, range);
        mats.push_back(std::move(m));
    }
    return EvalPoint(d, n, std::move(mats));
}

namespace {

std::optional<Mat> try_evaluate(const RatExpr& e, const EvalPoint& z) {
    try {
        return evaluate(e, z);
    } catch (const NotInDomain&) {
        return std::nullopt;
    }
}

/// First word (deglex) where the two series differ; both series must share
/// the truncation order.
std::optional<Word> first_series_difference(const TruncSeries& a, const TruncSeries& b) {
    for (const Word& w : words_up_to(a.d, a.order))
        if (a.coeff(w) != b.coeff(w)) return w;
    return std::nullopt;
}

/// Sampled comparison of f and g (g may be empty for the zero test).
Verdict sampled_verdict(const RatExpr& e1, const RatExpr* e2, const DecidePolicy& policy,
                        bool zero_test, int min_size, int max_size) {
    Rng rng(policy.seed);
    SampleStats stats;
    stats.samples_per_size = policy.samples_per_size;
    stats.seed = policy.seed;
    for (int n = min_size; n <= max_size; ++n) {
        stats.sizes.push_back(n);
        int common = 0;
        for (int k = 0; k < policy.samples_per_size; ++k) {
            EvalPoint pt = sample_point(e1.d(), n, policy.entry_range, rng);
            auto v1 = try_evaluate(e1, pt);
            if (!v1) continue;
            if (zero_test) {
                ++common;
                if (!v1->is_zero()) {
                    stats.common_per_size.push_back(common);
                    return Verdict{VerdictKind::NonzeroExact, pt, stats, "sampled witness"};
                }
            } else {
                auto v2 = try_evaluate(*e2, pt);
                if (!v2) continue;
                ++common;
                if (*v1 != *v2) {
                    stats.common_per_size.push_back(common);
                    return Verdict{VerdictKind::NotEquivalent, pt, stats, "sampled witness"};
                }
            }
        }
        stats.common_per_size.push_back(common);
    }
    if (stats.total_common() < policy.min_common)
        return Verdict{VerdictKind::Inconclusive, std::nullopt, stats,
                       "too few common-domain samples"};
    return Verdict{VerdictKind::EquivalentSampled, std::nullopt, stats,
                   zero_test ? "all sampled values zero" : "all sampled values agree"};
}

/// Witness for a nonzero regular-at-zero function from its minimal
/// realization: the zero point when D != 0, otherwise a staircase point of a
/// word with nonzero coefficient.
EvalPoint regular_nonzero_witness(const RatExpr& e, const FmRealization& minimal) {
    if (!minimal.D.is_zero()) return zero_point(e.d(), 1);
    TruncSeries s = fm_series(minimal, 2 * minimal.m);
    for (const auto& [w, c] : s.coeffs)
        if (!c.is_zero()) return staircase_point(e.d(), w);
    throw Error("minimal realization with m > 0 has identically zero series");
}

}  // namespace

Verdict equivalent(const RatExpr& e1, const RatExpr& e2, const DecidePolicy& policy) {
    if (e1.arity() != 1 || e2.arity() != 1)
        throw ShapeError("equivalence expects arity-1 expressions");
    if (e1.d() != e2.d() || e1.rows() != e2.rows() || e1.cols() != e2.cols())
        throw ShapeError("equivalence expects equal shapes");
    if (regular_at_zero(e1) && regular_at_zero(e2)) {
        FmRealization r1 = minimize(realize(e1));
        FmRealization r2 = minimize(realize(e2));
        // Realizations of dimensions m1, m2 agree as functions as soon as
        // their series agree through length m1 + m2.
        int bound = r1.m + r2.m;
        TruncSeries s1 = fm_series(r1, bound), s2 = fm_series(r2, bound);
        auto diff = first_series_difference(s1, s2);
        if (!diff)
            return Verdict{VerdictKind::EquivalentExact, std::nullopt, std::nullopt,
                           "minimal realizations of dimension " + std::to_string(r1.m) + " agree"};
        // Prefer a small sampled witness; the staircase point of the differing
        // word always works as a deterministic fallback.
        Rng rng(policy.seed);
        for (int n = 1; n <= policy.max_size; ++n)
            for (int k = 0; k < policy.samples_per_size; ++k) {
                EvalPoint pt = sample_point(e1.d(), n, policy.entry_range, rng);
                auto v1 = try_evaluate(e1, pt), v2 = try_evaluate(e2, pt);
                if (v1 && v2 && *v1 != *v2)
                    return Verdict{VerdictKind::NotEquivalent, pt, std::nullopt,
                                   "series differ at word " + diff->to_string()};
            }
        EvalPoint wit = staircase_point(e1.d(), *diff);
        if (evaluate(e1, wit) == evaluate(e2, wit))
            throw Error("staircase witness failed to separate differing series");
        return Verdict{VerdictKind::NotEquivalent, wit, std::nullopt,
                       "series differ at word " + diff->to_string()};
    }
    return sampled_verdict(e1, &e2, policy, false, 1, policy.max_size);
}

Verdict is_zero(const RatExpr& e, const DecidePolicy& policy) {
    if (e.arity() != 1) throw ShapeError("zero test expects an arity-1 expression");
    if (e.is_poly()) {
        const MatPoly& p = e.poly();
        if (p.is_zero())
            return Verdict{VerdictKind::ZeroExact, std::nullopt, std::nullopt,
                           "zero coefficient map"};
        // A nonzero polynomial vanishing on all n x n tuples has degree >= 2n,
        // so sampling must reach size floor(deg/2)+1 before it is guaranteed
        // a nonvanishing size exists.
        int guaranteed = p.degree() / 2 + 1;
        int max_size = std::max(policy.max_size, guaranteed);
        Verdict sampled = sampled_verdict(e, nullptr, policy, true, 1, max_size);
        if (sampled.kind == VerdictKind::NonzeroExact) return sampled;
        // Sampling missed; fall back to the deterministic staircase witness of
        // a word with nonzero coefficient.
        for (const auto& [w, c] : p.terms())
            if (!c.is_zero()) {
                EvalPoint wit = staircase_point(e.d(), w);
                Verdict v{VerdictKind::NonzeroExact, wit, std::nullopt, "staircase witness"};
                if (evaluate(e, wit).is_zero())
                    throw Error("staircase witness failed on a nonzero polynomial");
                return v;
            }
        throw Error("unreachable: nonzero polynomial with empty support");
    }
    if (regular_at_zero(e)) {
        FmRealization r = minimize(realize(e));
        if (r.m == 0 && r.D.is_zero())
            return Verdict{VerdictKind::ZeroExact, std::nullopt, std::nullopt,
                           "minimal realization has dimension 0 and D = 0"};
        EvalPoint wit = regular_nonzero_witness(e, r);
        if (evaluate(e, wit).is_zero()) throw Error("nonzero witness failed to re-evaluate");
        return Verdict{VerdictKind::NonzeroExact, wit, std::nullopt,
                       "witness from minimal realization"};
    }
    return sampled_verdict(e, nullptr, policy, true, 1, policy.max_size);
}

}  // namespace ncrat
