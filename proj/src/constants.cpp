#include "radnorm/constants.hpp"

#include <stdexcept>
#include <vector>

#include "radnorm/combinatorics.hpp"

namespace radnorm {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void require_dimension(int dimension) {
  require(dimension >= 1, "dimension must be >= 1");
}

void require_power_order(int order) { require(order >= 0, "order must be >= 0"); }

void require_log_order(int order) {
  require(order >= 1, "logarithm constants need order k >= 1");
}

Rational fact(int n) { return Rational(factorial(n)); }

int ceil_half(int k) { return (k + 1) / 2; }

// sum_{n=ceil(k/2)}^{k-l} 2^{2n-k+shift} a_n C(n, k-n) C(k-n, l)
Rational inner_sum(int order, int l, int shift, const CoefficientFn& coeffs) {
  Rational sum(0);
  for (int n = ceil_half(order); n <= order - l; ++n) {
    sum += pow2(2 * n - order + shift) * coeffs(n) * binomial(Rational(n), order - n) *
           binomial(Rational(order - n), l);
  }
  return sum;
}

// k! sum_l (k-2l)! l! ((N-3)/2 + l)_l (inner_sum with 2^{+l})^2
Rational closed_double_sum(int dimension, int order, const CoefficientFn& coeffs) {
  const Rational half_shift(dimension - 3, 2);
  Rational total(0);
  for (int l = 0; l <= order / 2; ++l) {
    const Rational inner = inner_sum(order, l, l, coeffs);
    total += fact(order - 2 * l) * fact(l) * pochhammer(half_shift + Rational(l), l) * inner *
             inner;
  }
  return fact(order) * total;
}

// (k! sum_n 2^{2n-k} a_n C(n, k-n))^2
Rational one_dimensional_sum(int order, const CoefficientFn& coeffs) {
  Rational sum(0);
  for (int n = ceil_half(order); n <= order; ++n) {
    sum += pow2(2 * n - order) * coeffs(n) * binomial(Rational(n), order - n);
  }
  const Rational derivative = fact(order) * sum;
  return derivative * derivative;
}

Rational even_value(int dimension, int m, EvenInner inner) {
  return inner == EvenInner::closed_form ? gamma_even(dimension, m)
                                         : gamma_even_recursive(dimension, m);
}

}  // namespace

std::string NormKind::to_string() const {
  return is_logarithm() ? std::string("log") : "power(s=" + s_.to_string() + ")";
}

void ConstantQuery::validate() const {
  require_dimension(dimension);
  require_power_order(order);
  if (kind.is_logarithm()) require_log_order(order);
}

std::string to_string(Method method) {
  switch (method) {
    case Method::closed: return "closed";
    case Method::recursive: return "recursive";
    case Method::special: return "special";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "closed") return Method::closed;
  if (name == "recursive") return Method::recursive;
  if (name == "special") return Method::special;
  if (name == "oracle") return Method::oracle;
  throw std::invalid_argument("unknown method '" + name + "'");
}

CoefficientFn power_coefficients(const Rational& s) {
  const Rational half = s / Rational(2);
  return [half](int n) { return binomial(half, n); };
}

CoefficientFn log_coefficients() {
  return [](int n) {
    if (n == 0) return Rational(0);
    return Rational(n % 2 == 1 ? 1 : -1, 2L * n);
  };
}

Rational gamma_closed(int dimension, const Rational& s, int order) {
  require_dimension(dimension);
  require_power_order(order);
  return closed_double_sum(dimension, order, power_coefficients(s));
}

Rational ell_closed(int dimension, int order) {
  require_dimension(dimension);
  require_log_order(order);
  return closed_double_sum(dimension, order, log_coefficients());
}

Rational gamma_1d(const Rational& s, int order) {
  require_power_order(order);
  return one_dimensional_sum(order, power_coefficients(s));
}

Rational ell_1d(int order) {
  require_log_order(order);
  return one_dimensional_sum(order, log_coefficients());
}

Rational gamma_even(int dimension, int m) {
  require_dimension(dimension);
  require(m >= 0, "m must be >= 0");
  return pow2(2 * m) * fact(m) * fact(2 * m) *
         pochhammer(Rational(dimension, 2) + Rational(m - 1), m);
}

Rational gamma_even_recursive(int dimension, int m) {
  require_dimension(dimension);
  require(m >= 0, "m must be >= 0");
  // values[l] = gamma(d, 2l, 2l) for the current d, starting at d = 1.
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(m) + 1);
  for (int l = 0; l <= m; ++l) values.push_back(fact(2 * l) * fact(2 * l));
  for (int d = 2; d <= dimension; ++d) {
    std::vector<Rational> next;
    next.reserve(values.size());
    for (int j = 0; j <= m; ++j) {
      Rational sum(0);
      for (int l = 0; l <= j; ++l) {
        const Rational c = binomial(Rational(j), l);
        sum += fact(2 * (j - l)) / fact(2 * l) * c * c * values[static_cast<std::size_t>(l)];
      }
      next.push_back(fact(2 * j) * sum);
    }
    values = std::move(next);
  }
  return values[static_cast<std::size_t>(m)];
}

Rational gamma_special(int dimension, int order) {
  require_dimension(dimension);
  require_power_order(order);
  return pow2(order) * pochhammer(Rational(dimension, 2) + Rational(order - 2), order) *
         pochhammer(Rational(dimension + order - 3), order);
}

Rational ell2_special(int order) {
  require_log_order(order);
  const Rational f = fact(order - 1);
  return pow2(order - 1) * f * f;
}

Rational gamma_special_by_steps(int dimension, int order) {
  require_dimension(dimension);
  require_power_order(order);
  Rational value(1);
  for (int k = 1; k <= order; ++k) {
    value *= Rational(dimension + k - 3) * Rational(dimension + 2 * k - 4);
  }
  return value;
}

Rational ell2_special_by_steps(int order) {
  require_log_order(order);
  Rational value(1);
  for (int k = 2; k <= order; ++k) value *= Rational(2L * (k - 1) * (k - 1));
  return value;
}

Rational taylor_compose_norm_sq(int dimension, int order, const CoefficientFn& coeffs,
                                EvenInner inner) {
  require(dimension >= 2, "taylor_compose_norm_sq needs dimension >= 2");
  require_power_order(order);
  Rational total(0);
  for (int l = 0; l <= order / 2; ++l) {
    const Rational s = inner_sum(order, l, 0, coeffs);
    total += fact(order - 2 * l) / fact(2 * l) * s * s * even_value(dimension - 1, l, inner);
  }
  return fact(order) * total;
}

Rational gamma_recursive(int dimension, const Rational& s, int order, EvenInner inner) {
  require_dimension(dimension);
  require_power_order(order);
  if (dimension == 1) return gamma_1d(s, order);
  return taylor_compose_norm_sq(dimension, order, power_coefficients(s), inner);
}

Rational ell_recursive(int dimension, int order, EvenInner inner) {
  require_dimension(dimension);
  require_log_order(order);
  if (dimension == 1) return ell_1d(order);
  return taylor_compose_norm_sq(dimension, order, log_coefficients(), inner);
}

Rational phi_deriv_at_zero(int m, int order) {
  require(m >= 0, "m must be >= 0");
  require_power_order(order);
  if (order < m || order > 2 * m) return Rational(0);
  return pow2(2 * m - order) * fact(order) * binomial(Rational(m), order - m);
}

std::pair<Rational, Rational> half_identity_sides(const Rational& nu, int m) {
  require(m >= 0, "m must be >= 0");
  Rational lhs(0);
  for (int l = 0; l <= m; ++l) {
    lhs += fact(2 * l) / (pow2(2 * l) * fact(l)) * pochhammer(nu + Rational(m - l), m - l) *
           binomial(Rational(m), l);
  }
  const Rational rhs = pochhammer(nu + Rational(m) + Rational(1, 2), m);
  return {lhs, rhs};
}

bool half_identity_check(const Rational& nu, int m) {
  const auto [lhs, rhs] = half_identity_sides(nu, m);
  return lhs == rhs;
}

std::optional<ConstantValue> evaluate(const ConstantQuery& query, Method method) {
  query.validate();
  const int n = query.dimension;
  const int k = query.order;
  const bool log = query.kind.is_logarithm();
  const Rational& s = query.kind.exponent();
  auto wrap = [&](Rational v) { return ConstantValue{query, std::move(v), method}; };

  switch (method) {
    case Method::closed:
      return wrap(log ? ell_closed(n, k) : gamma_closed(n, s, k));
    case Method::recursive:
      return wrap(log ? ell_recursive(n, k) : gamma_recursive(n, s, k));
    case Method::special:
      if (log && n == 2) return wrap(ell2_special(k));
      if (!log && s == Rational(2 - n)) return wrap(gamma_special(n, k));
      return std::nullopt;
    case Method::oracle:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace radnorm
