#include <doctest.h>

#include "radnorm/sample_point.hpp"
#include "radnorm/term_sum.hpp"

using namespace radnorm;

namespace {

TermSum monomial(int n, const Rational& base, const Rational& c, std::vector<int> powers, int offset) {
  TermSum t(n, base);
  t.add(c, powers, offset);
  return t;
}

}  // namespace

TEST_CASE("differentiating a radial power") {
  const Rational s(5, 3);
  const TermSum u = TermSum::radial_power(3, s);
  CHECK(u.differentiate(0) == monomial(3, s, s, {1, 0, 0}, -2));
}

TEST_CASE("differentiating the log gradient component") {
  // x_1 r^{-2} in the plane
  const TermSum g = monomial(2, Rational(0), Rational(1), {1, 0}, -2);
  TermSum d1 = monomial(2, Rational(0), Rational(1), {0, 0}, -2);
  d1 += monomial(2, Rational(0), Rational(-2), {2, 0}, -4);
  CHECK(g.differentiate(0) == d1);
  CHECK(g.differentiate(1) == monomial(2, Rational(0), Rational(-2), {1, 1}, -4));
  CHECK_THROWS_AS(g.differentiate(2), std::out_of_range);
}

TEST_CASE("normal form rewrites x_N^2") {
  TermSum t(2, Rational(0));
  t.add(Rational(1), {2, 0}, 0);
  t.add(Rational(1), {0, 2}, 0);
  // x_1^2 + x_2^2 = r^2
  CHECK(t == TermSum::radial_power(2, Rational(2)));
  CHECK(t.size() == 1);
  CHECK(t.is_normalized());

  TermSum cancel(3, Rational(1, 2));
  cancel.add(Rational(3), {1, 0, 1}, -1);
  cancel.add(Rational(-3), {1, 0, 1}, -1);
  CHECK(cancel.is_zero());
}

TEST_CASE("equality across bases") {
  const TermSum a = TermSum::radial_power(2, Rational(3));
  CHECK(a == a.rebased(Rational(1)));
  CHECK(a.rebased(Rational(-5)).base() == Rational(-5));
  CHECK_THROWS_AS(a.rebased(Rational(1, 2)), std::invalid_argument);
  CHECK_FALSE(a == TermSum::radial_power(2, Rational(7, 2)));
  CHECK(TermSum(2, Rational(1, 3)) == TermSum(2, Rational(0)));
}

TEST_CASE("laplacian of radial powers") {
  for (int n = 1; n <= 5; ++n) {
    for (long p = -7; p <= 7; ++p) {
      const Rational nu(p, 3);
      const TermSum expected =
          TermSum::radial_power(n, nu - Rational(2), nu * (nu + Rational(n - 2)));
      CHECK(laplacian(TermSum::radial_power(n, nu)) == expected);
    }
    CHECK(laplacian(TermSum::radial_power(n, Rational(2 - n))).is_zero());
  }
}

TEST_CASE("log r is harmonic in the plane") {
  std::vector<TermSum> gradient{monomial(2, Rational(0), Rational(1), {1, 0}, -2),
                                monomial(2, Rational(0), Rational(1), {0, 1}, -2)};
  CHECK(divergence(gradient).is_zero());
  gradient.push_back(gradient.front());
  CHECK_THROWS(divergence(gradient));
}

TEST_CASE("product of sums") {
  // (x_1 r^{-1/2})^2 + (x_2 r^{-1/2})^2 = r
  const TermSum a = monomial(2, Rational(1, 2), Rational(1), {1, 0}, -1);
  const TermSum b = monomial(2, Rational(1, 2), Rational(1), {0, 1}, -1);
  CHECK((a * a).base() == Rational(1));
  CHECK(a * a + b * b == TermSum::radial_power(2, Rational(1)));
  CHECK((a * b).size() == 1);
}

TEST_CASE("evaluation divides out a radial power") {
  // 3 x_1 x_2 r^{-4} at (1, 2) over r^{-6}: 3 * 2 * r^2 = 30
  const TermSum t = monomial(2, Rational(0), Rational(3), {1, 1}, -4);
  const SamplePoint p(std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(t.evaluate_over(p, Rational(-6)) == Rational(30));
  CHECK(t.evaluate_over(p, Rational(-4)) == Rational(6));
  CHECK_THROWS_AS(t.evaluate_over(p, Rational(-5)), std::domain_error);
  CHECK_THROWS_AS(t.evaluate_over(SamplePoint(std::vector<Rational>{Rational(1)}), Rational(-4)),
                  std::invalid_argument);
}

TEST_CASE("homogeneity is preserved by differentiation") {
  TermSum u = TermSum::radial_power(3, Rational(7, 2));
  for (int k = 1; k <= 6; ++k) {
    u = u.differentiate(k % 3);
    CHECK(u.homogeneity_offset() == -k);
    CHECK(u.is_normalized());
  }
  TermSum mixed(2, Rational(0));
  mixed.add(Rational(1), {1, 0}, 0);
  mixed.add(Rational(1), {0, 0}, 0);
  CHECK_THROWS_AS(mixed.homogeneity_offset(), std::logic_error);
}

TEST_CASE("text rendering") {
  CHECK(TermSum(2, Rational(0)).to_string() == "0");
  CHECK(monomial(2, Rational(0), Rational(-2), {1, 1}, -4).to_string() == "(-2)*x1*x2*r^(-4)");
}
