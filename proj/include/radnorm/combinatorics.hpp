#pragma once

// Factorials, falling factorials and generalized binomial coefficients over
// the rationals. Results are memoized per thread; the caches never change a
// returned value.

#include "radnorm/rational.hpp"

namespace radnorm {

/// k! exactly. Throws std::invalid_argument for k < 0.
Integer factorial(int k);

/// Falling factorial (nu)_k = nu (nu - 1) ... (nu - k + 1), with (nu)_0 = 1.
Rational pochhammer(const Rational& nu, int k);

/// Generalized binomial coefficient (nu)_k / k!.
Rational binomial(const Rational& nu, int k);

/// 2^e for any integer e (negative exponents give 1/2^|e|).
Rational pow2(int exponent);

/// Drops the per-thread memo tables (tests use this to compare cold and warm
/// results).
void clear_combinatorics_cache();

}  // namespace radnorm
