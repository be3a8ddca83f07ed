#pragma once

/**
 * @file constants.hpp
 * @brief Exact values of the scale-invariant derivative norms of |x|^s and
 *        log|x| on R^N.
 *
 * For u = |x|^s the quantity (|x|^{k-s} |grad^k u|)^2 is a constant
 * gamma(N, s, k); for u = log|x| the quantity (|x|^k |grad^k u|)^2 is a
 * constant ell(N, k). Here |grad^k u|^2 sums (D_i u)^2 over all N^k ordered
 * index tuples i.
 *
 * Several independent routes are provided so they can be checked against
 * each other:
 *  - closed double sums over (l, n),
 *  - a recursion in the dimension that peels off one coordinate and uses the
 *    even-power values gamma(N-1, 2l, 2l),
 *  - special-case products (s = 2 - N, and the logarithm in the plane),
 *  - the symbolic oracle in oracle.hpp.
 */

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "radnorm/rational.hpp"

namespace radnorm {

/// Which function is being differentiated: |x|^s or log|x|.
class NormKind {
public:
  enum class Family { power, logarithm };

  static NormKind power(Rational s) { return NormKind(Family::power, std::move(s)); }
  static NormKind logarithm() { return NormKind(Family::logarithm, Rational(0)); }

  Family family() const { return family_; }
  bool is_power() const { return family_ == Family::power; }
  bool is_logarithm() const { return family_ == Family::logarithm; }
  /// Exponent s for power kinds; 0 for the logarithm.
  const Rational& exponent() const { return s_; }

  std::string to_string() const;
  friend bool operator==(const NormKind&, const NormKind&) = default;

private:
  NormKind(Family family, Rational s) : family_(family), s_(std::move(s)) {}
  Family family_;
  Rational s_;
};

struct ConstantQuery {
  int dimension = 1;
  int order = 0;
  NormKind kind = NormKind::power(Rational(0));

  /// Throws std::invalid_argument unless N >= 1, k >= 0, and k >= 1 for the
  /// logarithm.
  void validate() const;
  friend bool operator==(const ConstantQuery&, const ConstantQuery&) = default;
};

enum class Method { closed, recursive, special, oracle };

std::string to_string(Method method);
Method parse_method(const std::string& name);

struct ConstantValue {
  ConstantQuery query;
  Rational value;
  Method method = Method::closed;
};

/// Coefficient sequence n -> a_n of a profile f(t) = sum a_n t^n.
using CoefficientFn = std::function<Rational(int)>;

/// a_n = C(s/2, n): the Taylor coefficients of (1 + t)^{s/2}.
CoefficientFn power_coefficients(const Rational& s);
/// a_n = (-1)^{n-1} / (2n) for n >= 1, a_0 = 0: the coefficients of
/// (1/2) log(1 + t).
CoefficientFn log_coefficients();

Rational gamma_closed(int dimension, const Rational& s, int order);
Rational ell_closed(int dimension, int order);

/// One-dimensional values computed from the single sum over n; they equal
/// ((s)_k)^2 and ((k-1)!)^2.
Rational gamma_1d(const Rational& s, int order);
Rational ell_1d(int order);

/// gamma(N, 2m, 2m) = 2^{2m} m! (2m)! (N/2 + m - 1)_m.
Rational gamma_even(int dimension, int m);
/// gamma(N, 2m, 2m) from the dimension recursion
///   gamma(N,2m,2m) = (2m)! sum_l ((2m-2l)!/(2l)!) C(m,l)^2 gamma(N-1,2l,2l)
/// down to gamma(1, 2m, 2m) = ((2m)!)^2.
Rational gamma_even_recursive(int dimension, int m);

/// gamma(N, 2 - N, k) = 2^k (N/2 + k - 2)_k (N + k - 3)_k.
Rational gamma_special(int dimension, int order);
/// ell(2, k) = 2^{k-1} ((k-1)!)^2.
Rational ell2_special(int order);
/// One step of the Laplacian recursion for s = 2 - N:
///   gamma(N, 2-N, k) = (N + k - 3)(N + 2k - 4) gamma(N, 2-N, k-1),
/// iterated from gamma(N, 2-N, 0) = 1.
Rational gamma_special_by_steps(int dimension, int order);
/// ell(2, k) = 2 (k-1)^2 ell(2, k-1), iterated from ell(2, 1) = 1.
Rational ell2_special_by_steps(int order);

/// How gamma(N-1, 2l, 2l) is obtained inside the dimension recursion.
enum class EvenInner { closed_form, deep_recursion };

Rational gamma_recursive(int dimension, const Rational& s, int order,
                         EvenInner inner = EvenInner::closed_form);
Rational ell_recursive(int dimension, int order, EvenInner inner = EvenInner::closed_form);

/// |grad^k [f(rho_N)](0)|^2 for f(t) = sum a_n t^n and rho_N(x) = |x + e_N|^2 - 1.
/// Only a_n with ceil(k/2) <= n <= k are queried. Requires N >= 2.
Rational taylor_compose_norm_sq(int dimension, int order, const CoefficientFn& coeffs,
                                EvenInner inner = EvenInner::closed_form);

/// k-th derivative at 0 of (t^2 + 2t)^m.
Rational phi_deriv_at_zero(int m, int order);

/// Both sides of
///   sum_l ((2l)! / (2^{2l} l!)) (nu+m-l)_{m-l} C(m,l) = (nu + m + 1/2)_m.
std::pair<Rational, Rational> half_identity_sides(const Rational& nu, int m);
bool half_identity_check(const Rational& nu, int m);

/// Value of the requested method, or nullopt when the method does not apply
/// (special outside its two families, oracle always: see oracle.hpp).
std::optional<ConstantValue> evaluate(const ConstantQuery& query, Method method);

}  // namespace radnorm
