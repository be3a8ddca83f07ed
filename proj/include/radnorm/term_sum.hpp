#pragma once

/**
 * @file term_sum.hpp
 * @brief Finite sums  sum_t c_t x^{beta_t} r^{base + j_t}  on R^N \ {0}.
 *
 * r = |x| and base is a rational radial exponent shared by all terms (s for
 * derivatives of |x|^s, 0 for derivatives of log|x|); each term carries an
 * integer offset j. The class is closed under partial differentiation:
 *
 *   d/dx_i (x^b r^t) = b_i x^{b - e_i} r^t + t x^{b + e_i} r^{t - 2}.
 *
 * Normal form: terms are keyed by (beta, j) in lexicographic order, zero
 * coefficients are dropped, and x_N^2 is rewritten as r^2 - sum_{i<N} x_i^2
 * so every term has beta_N <= 1. With that rewrite the representation of a
 * function is unique, so operator== is equality of functions.
 */

#include <compare>
#include <string>
#include <vector>
#include <map>

#include "radnorm/rational.hpp"
#include "radnorm/sample_point.hpp"

namespace radnorm {

struct Monomial {
  std::vector<int> powers;  // beta, one entry per coordinate
  int offset = 0;           // j: radial exponent is base + j

  int degree() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct Term {
  Rational coeff;
  Monomial monomial;
};

class TermSum {
public:
  /// The zero function on R^N with the given radial base exponent.
  TermSum(int dimension, Rational base);
  /// c * r^exponent (base = exponent, offset 0).
  static TermSum radial_power(int dimension, const Rational& exponent,
                              const Rational& coeff = Rational(1));

  int dimension() const { return dim_; }
  const Rational& base() const { return base_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<Term> terms() const;

  /// Adds c x^powers r^{base + offset}, merging and reducing on the fly.
  void add(const Rational& coeff, const std::vector<int>& powers, int offset);

  /// Partial derivative along the 0-based axis.
  TermSum differentiate(int axis) const;

  /// Same function expressed with another base; the bases must differ by an
  /// integer.
  TermSum rebased(const Rational& new_base) const;

  TermSum& operator+=(const TermSum& rhs);
  TermSum& operator*=(const Rational& factor);
  friend TermSum operator+(TermSum lhs, const TermSum& rhs) { return lhs += rhs; }
  friend TermSum operator*(TermSum lhs, const Rational& factor) { return lhs *= factor; }
  /// Product of two sums; bases add.
  friend TermSum operator*(const TermSum& lhs, const TermSum& rhs);
  friend bool operator==(const TermSum& lhs, const TermSum& rhs);

  /// u(x) / r^radial_power as an exact rational. Every term must satisfy
  /// base + j - radial_power in 2Z so only integer powers of r^2 appear;
  /// throws std::domain_error otherwise.
  Rational evaluate_over(const SamplePoint& point, const Rational& radial_power) const;

  /// Every term has |beta| + j equal to the returned value (throws
  /// std::logic_error if the sum is not homogeneous). Zero sums report 0.
  int homogeneity_offset() const;

  /// Normal-form check: nonzero coefficients and beta_N <= 1 everywhere.
  bool is_normalized() const;

  std::string to_string() const;

private:
  int dim_;
  Rational base_;
  std::map<Monomial, Rational> terms_;
};

/// Sum of the second derivatives along every axis.
TermSum laplacian(const TermSum& u);
/// sum_i d/dx_i field[i]; field.size() must equal the dimension.
TermSum divergence(const std::vector<TermSum>& field);

}  // namespace radnorm
