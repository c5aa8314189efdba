#pragma once

#include <cstdint>

#include "ncrat/rational.hpp"

namespace ncrat {

/// Deterministic pseudo-random stream (xorshift-multiply). The bounded-int
/// mapping is our own so that seeded runs reproduce byte-identically across
/// standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9E3779B97F4A7C15ull) { next(); }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi] inclusive.
    long int_in(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    Rational rational_in(long lo, long hi) { return Rational(int_in(lo, hi)); }

    bool chance(double p) { return static_cast<double>(next() >> 11) / 9007199254740992.0 < p; }

    /// Independent substream, for parallel-safe deterministic forking.
    Rng fork() { return Rng(next()); }

  private:
    std::uint64_t state_;
};

}  // namespace ncrat
