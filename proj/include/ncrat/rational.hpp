#pragma once

#include <gmpxx.h>

#include <string>

namespace ncrat {

/// Exact rational scalar. GMP keeps values canonical (coprime, positive
/// denominator), which is what every identity test in this library relies on.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "num/den" or "num" with optional leading '-'.
Rational rat_from_string(const std::string& text);

/// Prints "num/den", or just "num" for integers.
std::string rat_to_string(const Rational& value);

}  // namespace ncrat
