#pragma once

// Small-k polynomials for gamma(N, s, k) (k <= 4) and ell(N, k)
// (k <= 8), used as golden values by the unit and acceptance suites.

#include <optional>

#include "radnorm/rational.hpp"

namespace radnorm::golden {

inline std::optional<Rational> gamma_polynomial(int n_dim, const Rational& s, int k) {
  const Rational n(n_dim);
  const Rational s2 = s * s;
  const Rational sm2 = (s - 2) * (s - 2);
  switch (k) {
    case 1: return s2;
    case 2: return s2 * (s2 - 2 * s + n);
    case 3: return s2 * sm2 * (s2 - 2 * s + 3 * n - 2);
    case 4:
      return s2 * sm2 *
             (s.pow(4) - 8 * s.pow(3) + (16 + 6 * n) * s2 + (12 - 36 * n) * s + 3 * n * n +
              54 * n - 48);
    default: return std::nullopt;
  }
}

inline std::optional<Rational> ell_polynomial(int n_dim, int k) {
  const Rational n(n_dim);
  switch (k) {
    case 1: return Rational(1);
    case 2: return n;
    case 3: return 4 * (3 * n - 2);
    case 4: return 12 * (n * n + 18 * n - 16);
    case 5: return 192 * (5 * n * n + 30 * n - 32);
    case 6: return 960 * (n.pow(3) + 78 * n * n + 224 * n - 288);
    case 7: return 34560 * (7 * n.pow(3) + 196 * n * n + 308 * n - 496);
    case 8: return 241920 * (n.pow(4) + 204 * n.pow(3) + 3052 * n * n + 2736 * n - 5888);
    default: return std::nullopt;
  }
}

}  // namespace radnorm::golden
