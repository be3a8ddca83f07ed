#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force evaluation of |grad^k u|^2 by symbolic differentiation.
 *
 * Every mixed partial D_i u of u = |x|^s (or u = log|x|) is built as a
 * TermSum and evaluated at rational sample points. Because D_i u is
 * homogeneous of degree s - k, it factors as r^{s - 2k} V_i(x) with V_i
 * rational, so
 *
 *   |grad^k u|^2 = r^{2s - 4k} sum_i V_i^2,
 *
 * and the scale-invariant quantity r^{2(k - s)} |grad^k u|^2 equals
 * (r^2)^{-k} sum_i V_i^2, an exact rational. The logarithm uses s = 0.
 *
 * Work is capped at desk scale (N <= 6, k <= 8 unless a ScopedOracleLimits
 * is active); larger requests throw CapacityError.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "radnorm/constants.hpp"
#include "radnorm/sample_point.hpp"
#include "radnorm/term_sum.hpp"

namespace radnorm {

inline constexpr int kMaxOracleDimension = 6;
inline constexpr int kMaxOracleOrder = 8;

class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  int max_dimension = kMaxOracleDimension;
  int max_order = kMaxOracleOrder;
};

/// Limits in effect on this thread.
OracleLimits oracle_limits();

/// Temporarily replaces this thread's limits (restored on destruction).
class ScopedOracleLimits {
public:
  explicit ScopedOracleLimits(OracleLimits limits);
  ~ScopedOracleLimits();
  ScopedOracleLimits(const ScopedOracleLimits&) = delete;
  ScopedOracleLimits& operator=(const ScopedOracleLimits&) = delete;

private:
  OracleLimits saved_;
};

/// Throws CapacityError when N or k exceed the current limits.
void check_oracle_capacity(int dimension, int order);

/// Symbolic starting point of the derivative tower. For |x|^s it is the single
/// function r^s at order 0. log r is not a TermSum, so the logarithm starts at
/// order 1 with the gradient components x_i r^{-2}.
struct Seed {
  int order = 0;
  std::vector<TermSum> components;
};

Seed seed(int dimension, const NormKind& kind);

/// Memo of D_i u keyed by the sorted index multiset (mixed partials commute).
class DerivativeTable {
public:
  DerivativeTable(int dimension, NormKind kind);

  int dimension() const { return dim_; }
  const NormKind& kind() const { return kind_; }

  /// D_{i_1} ... D_{i_k} u for 0-based indices in any order.
  const TermSum& derivative(std::span<const int> indices);

private:
  const TermSum& lookup_sorted(const std::vector<int>& sorted);

  int dim_;
  NormKind kind_;
  Seed seed_;
  std::map<std::vector<int>, TermSum> cache_;
};

/// value = coeff * r^exponent at a point with squared radius radius_sq.
struct RadialValue {
  Rational coeff;
  Rational exponent;
  Rational radius_sq;

  /// Exact value when the exponent is an even integer.
  std::optional<Rational> exact() const;
  /// coeff * r^{exponent + power}; requires exponent + power even.
  Rational times_radial_power(const Rational& power) const;
};

/// Sum of (D_i u(x))^2 over i in {0..N-1}^k. weighted = true enumerates only
/// nondecreasing tuples with multinomial weights k!/prod(mult!).
RadialValue grad_norm_sq(DerivativeTable& table, int order, const SamplePoint& point,
                         bool weighted);
RadialValue grad_norm_sq(int dimension, const NormKind& kind, int order,
                         const SamplePoint& point, bool weighted);

/// r^{2(k - s)} |grad^k u|^2 (the quantity that should equal gamma or ell).
Rational rescaled_norm_sq(DerivativeTable& table, int order, const SamplePoint& point,
                          bool weighted);

/// Unweighted sum over nondecreasing tuples only. Not rotation invariant.
RadialValue tilde_norm_sq(int dimension, const NormKind& kind, int order,
                          const SamplePoint& point);

struct PointValue {
  SamplePoint point;
  Rational rescaled;
};

struct VerifyReport {
  ConstantQuery query;
  std::vector<ConstantValue> method_values;  // closed, recursive, special (when applicable)
  std::vector<PointValue> oracle_values;
  bool constant = false;      // oracle values agree across points
  bool exact_match = false;   // constant and equal to every method value
  std::string detail;
  double elapsed_ms = 0.0;
};

/// Evaluates the oracle at each point, checks point-independence and compares
/// against the closed, recursive and (when applicable) special values.
VerifyReport verify_constancy(int dimension, const NormKind& kind, int order,
                              const std::vector<SamplePoint>& points, bool weighted = true);

/// |grad_N^k u|^2 and sum_j C(k,j) |grad_{N-1}^j D_N^{k-j} u|^2, both as
/// coefficients of the common r^{2s-4k}.
std::pair<Rational, Rational> dimension_split_sides(int dimension, const NormKind& kind, int order,
                                                    const SamplePoint& point);
bool dimension_split_check(int dimension, const NormKind& kind, int order,
                           const SamplePoint& point);

/// sum_{i in I_N^k} (D_i u)^2 as a TermSum.
TermSum squared_norm_sum(DerivativeTable& table, int order);

struct LaplacianStep {
  TermSum lhs;  // Laplacian of |grad^{k-1} u|^2
  TermSum rhs;  // 2 * constant(k) * r^{...}
  bool holds = false;
};

/// For u = r^{2-N}: Laplacian of |grad^{k-1} u|^2 = 2 gamma_special(N,k) r^{2(2-N-k)}.
LaplacianStep laplacian_recursion_step(int dimension, int order);
/// For u = log r in the plane: Laplacian of |grad^{k-1} u|^2 = 2 ell2_special(k) r^{-2k}
/// (k >= 2).
LaplacianStep log_laplacian_recursion_step(int order);

}  // namespace radnorm
