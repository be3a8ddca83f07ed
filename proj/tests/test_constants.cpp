#include <doctest.h>

#include <vector>

#include "golden.hpp"
#include "radnorm/combinatorics.hpp"
#include "radnorm/constants.hpp"
#include "radnorm/sample_point.hpp"

using namespace radnorm;

namespace {

const std::vector<Rational> kExponents{Rational(-3),   Rational(-3, 2), Rational(-1),
                                       Rational(1, 2), Rational(1),     Rational(2),
                                       Rational(5, 2), Rational(4)};

// k-th derivative at 0 of (t^2 + 2t)^m by expanding the polynomial.
Rational phi_oracle(int m, int k) {
  std::vector<Rational> poly{Rational(1)};  // coefficients of t^0, t^1, ...
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> next(poly.size() + 2, Rational(0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += Rational(2) * poly[d];
      next[d + 2] += poly[d];
    }
    poly = std::move(next);
  }
  if (k >= static_cast<int>(poly.size())) return Rational(0);
  return poly[static_cast<std::size_t>(k)] * Rational(factorial(k));
}

Rational product_falling(const Rational& nu, int k) {
  Rational p(1);
  for (int j = 0; j < k; ++j) p *= nu - Rational(j);
  return p;
}

}  // namespace

TEST_CASE("gamma_closed examples") {
  CHECK(gamma_closed(3, Rational(2), 2) == Rational(12));
  CHECK(gamma_closed(5, Rational(7, 2), 0) == Rational(1));
  CHECK(gamma_closed(2, Rational(3), 3) == Rational(63));
}

TEST_CASE("ell_closed examples and errors") {
  CHECK(ell_closed(3, 3) == Rational(28));
  CHECK(ell_closed(1, 4) == Rational(36));
  CHECK(ell_closed(3, 4) == Rational(564));
  CHECK_THROWS_AS(ell_closed(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(gamma_closed(0, Rational(1), 1), std::invalid_argument);
}

TEST_CASE("one-dimensional values") {
  CHECK(gamma_1d(Rational(3), 2) == Rational(36));
  CHECK(gamma_1d(Rational(-11, 5), 0) == Rational(1));
  CHECK(gamma_1d(Rational(1, 2), 2) == Rational(1, 16));
  CHECK(ell_1d(1) == Rational(1));
  CHECK(ell_1d(3) == Rational(4));
  CHECK(ell_1d(5) == Rational(576));
  CHECK_THROWS_AS(ell_1d(0), std::invalid_argument);
}

TEST_CASE("even powers") {
  CHECK(gamma_even(1, 2) == Rational(576));
  CHECK(gamma_even(4, 1) == Rational(16));
  CHECK(gamma_even(1, 0) == Rational(1));
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= 5; ++m) {
      CHECK(gamma_even(n, m) == gamma_closed(n, Rational(2 * m), 2 * m));
      CHECK(gamma_even_recursive(n, m) == gamma_even(n, m));
    }
  }
}

TEST_CASE("special cases") {
  CHECK(gamma_special(3, 1) == Rational(1));
  CHECK(gamma_special(2, 2) == Rational(0));
  CHECK(gamma_special(4, 2) == Rational(48));
  CHECK(ell2_special(1) == Rational(1));
  CHECK(ell2_special(2) == Rational(2));
  CHECK(ell2_special(4) == Rational(288));
  CHECK_THROWS_AS(ell2_special(0), std::invalid_argument);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= 6; ++k) {
      CHECK(gamma_special_by_steps(n, k) == gamma_special(n, k));
    }
  }
  for (int k = 1; k <= 8; ++k) CHECK(ell2_special_by_steps(k) == ell2_special(k));
}

TEST_CASE("recursive values") {
  CHECK(gamma_recursive(2, Rational(3), 3) == Rational(63));
  CHECK(gamma_recursive(1, Rational(3), 2) == Rational(36));
  CHECK(gamma_recursive(4, Rational(4), 4) == Rational(4608));
  CHECK(gamma_even(4, 2) == Rational(4608));
  CHECK(ell_recursive(2, 3) == Rational(16));
  CHECK(ell_recursive(1, 2) == Rational(1));
  CHECK(ell_recursive(5, 4) == Rational(1188));
  CHECK_THROWS_AS(ell_recursive(2, 0), std::invalid_argument);
}

TEST_CASE("deep recursion mode agrees with the closed inner values") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= 6; ++k) {
      for (const auto& s : kExponents) {
        CHECK(gamma_recursive(n, s, k, EvenInner::deep_recursion) == gamma_recursive(n, s, k));
      }
      if (k >= 1) CHECK(ell_recursive(n, k, EvenInner::deep_recursion) == ell_recursive(n, k));
    }
  }
}

TEST_CASE("taylor composition at the origin") {
  CHECK(taylor_compose_norm_sq(2, 2, power_coefficients(Rational(2))) == Rational(8));
  auto log_first = [](int n) { return n == 1 ? Rational(1, 2) : Rational(0); };
  CHECK(taylor_compose_norm_sq(3, 1, log_first) == Rational(1));
  auto unit = [](int) { return Rational(1); };
  CHECK(taylor_compose_norm_sq(2, 0, unit) == Rational(1));
  CHECK_THROWS_AS(taylor_compose_norm_sq(1, 2, unit), std::invalid_argument);

  // Only ceil(k/2) <= n <= k is consumed.
  std::vector<int> seen;
  auto spy = [&](int n) {
    seen.push_back(n);
    return Rational(1);
  };
  taylor_compose_norm_sq(3, 5, spy);
  for (int n : seen) CHECK((n >= 3 && n <= 5));
}

TEST_CASE("phi derivatives at zero") {
  CHECK(phi_deriv_at_zero(1, 1) == Rational(2));
  CHECK(phi_deriv_at_zero(2, 1) == Rational(0));
  CHECK(phi_deriv_at_zero(2, 3) == Rational(24));
  for (int m = 0; m <= 7; ++m) {
    for (int k = 0; k <= 2 * m + 3; ++k) CHECK(phi_deriv_at_zero(m, k) == phi_oracle(m, k));
  }
}

TEST_CASE("half-integer Pochhammer identity") {
  CHECK(half_identity_check(Rational(0), 0));
  const auto [lhs, rhs] = half_identity_sides(Rational(1, 2), 1);
  CHECK(lhs == Rational(2));
  CHECK(rhs == Rational(2));
  CHECK(half_identity_check(Rational(-3, 2), 3));
  // Independent right-hand side at the same points.
  CHECK(half_identity_sides(Rational(-3, 2), 3).second == product_falling(Rational(-3, 2) + Rational(7, 2), 3));
  for (const auto& nu : random_rationals(50, 11)) {
    for (int m = 0; m <= 10; ++m) CHECK(half_identity_check(nu, m));
  }
}

TEST_CASE("property: closed and recursive routes agree") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= 6; ++k) {
      for (const auto& s : kExponents) CHECK(gamma_closed(n, s, k) == gamma_recursive(n, s, k));
      if (k >= 1) CHECK(ell_closed(n, k) == ell_recursive(n, k));
    }
  }
}

TEST_CASE("property: one-dimensional collapse") {
  for (const auto& s : random_rationals(20, 3, 9, 5)) {
    for (int k = 0; k <= 10; ++k) {
      const Rational p = product_falling(s, k);
      CHECK(gamma_closed(1, s, k) == p * p);
      CHECK(gamma_1d(s, k) == p * p);
    }
  }
  for (int k = 1; k <= 10; ++k) {
    const Rational f(factorial(k - 1));
    CHECK(ell_closed(1, k) == f * f);
  }
}

TEST_CASE("property: specialization to s = 2 - N") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= 6; ++k) CHECK(gamma_closed(n, Rational(2 - n), k) == gamma_special(n, k));
  }
  for (int k = 1; k <= 8; ++k) CHECK(ell_closed(2, k) == ell2_special(k));
}

TEST_CASE("property: vanishing locus and sign") {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (int k = 2 * m + 1; k <= 2 * m + 4; ++k) CHECK(gamma_closed(n, Rational(2 * m), k).is_zero());
    }
    for (int k = 1; k <= 8; ++k) CHECK(ell_closed(n, k).sign() > 0);
    for (const auto& s : kExponents) {
      for (int k = 0; k <= 6; ++k) CHECK(gamma_closed(n, s, k).sign() >= 0);
    }
  }
}

TEST_CASE("golden small-order polynomials") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= 4; ++k) {
      for (const auto& s : kExponents) CHECK(gamma_closed(n, s, k) == *golden::gamma_polynomial(n, s, k));
    }
    for (int k = 1; k <= 8; ++k) CHECK(ell_closed(n, k) == *golden::ell_polynomial(n, k));
  }
}

TEST_CASE("evaluate dispatch") {
  const ConstantQuery gamma_q{4, 2, NormKind::power(Rational(-2))};
  CHECK(evaluate(gamma_q, Method::special)->value == Rational(48));
  CHECK(evaluate(gamma_q, Method::recursive)->value == Rational(48));
  CHECK_FALSE(evaluate(ConstantQuery{3, 2, NormKind::power(Rational(1))}, Method::special));
  CHECK_FALSE(evaluate(gamma_q, Method::oracle));
  CHECK(evaluate(ConstantQuery{2, 3, NormKind::logarithm()}, Method::special)->value == Rational(16));
  CHECK_THROWS_AS(evaluate(ConstantQuery{2, 0, NormKind::logarithm()}, Method::closed),
                  std::invalid_argument);
  CHECK(parse_method("oracle") == Method::oracle);
  CHECK_THROWS(parse_method("bogus"));
}
