#pragma once

/**
 * @file rational.hpp
 * @brief Exact signed rational numbers.
 *
 * Values are always stored in lowest terms with a positive denominator, so
 * structural equality is numeric equality. Arithmetic never rounds and
 * division by zero throws instead of producing a value.
 *
 * Text form is "p/q" with the sign on p and "/q" omitted when q = 1.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace radnorm {

using Integer = mpz_class;

class Rational {
public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const Integer& value) : q_(value) {}
  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses "p", "p/q", "+p/q" or "-p/q". Rejects q = 0; normalizes
  /// non-reduced input.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Exact integer value; throws std::domain_error unless is_integer().
  Integer to_integer() const;
  /// Like to_integer() but also requires the value to fit in a long.
  long to_long() const;

  Rational abs() const;
  /// Integer power; negative exponents invert (zero base then throws).
  Rational pow(long exponent) const;

  std::string to_string() const;
  /// Decimal rendering with the given number of significant digits.
  std::string to_decimal(int significant_digits = 12) const;
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  /// True when gcd(|p|, q) = 1 and q > 0; holds for every constructed value.
  bool is_reduced() const;

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Comma-separated list of rationals, e.g. "1,-2/3,4".
std::vector<Rational> parse_rational_list(std::string_view text);
std::string format_rational_list(std::span<const Rational> values);

}  // namespace radnorm
