#include "radnorm/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "radnorm/combinatorics.hpp"

namespace radnorm {

namespace {

using Tuple = std::vector<int>;

// Nondecreasing tuples over {0..n-1} of length k, in lexicographic order.
void for_each_multiset(int n, int k, const std::function<void(const Tuple&)>& fn) {
  Tuple t(static_cast<std::size_t>(k), 0);
  while (true) {
    fn(t);
    int pos = k - 1;
    while (pos >= 0 && t[static_cast<std::size_t>(pos)] == n - 1) --pos;
    if (pos < 0) return;
    const int next = t[static_cast<std::size_t>(pos)] + 1;
    std::fill(t.begin() + pos, t.end(), next);
  }
}

// All n^k tuples, odometer order.
void for_each_tuple(int n, int k, const std::function<void(const Tuple&)>& fn) {
  Tuple t(static_cast<std::size_t>(k), 0);
  while (true) {
    fn(t);
    int pos = k - 1;
    while (pos >= 0 && t[static_cast<std::size_t>(pos)] == n - 1) {
      t[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++t[static_cast<std::size_t>(pos)];
  }
}

// k! / prod_l (#{n : t_n = l})! for a sorted tuple.
Rational multinomial_weight(const Tuple& sorted) {
  Integer denom(1);
  std::size_t run = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
    if (i + 1 == sorted.size() || sorted[i + 1] != sorted[i]) denom *= factorial(static_cast<int>(run));
  }
  return Rational(factorial(static_cast<int>(sorted.size())), denom);
}

void require_order(const NormKind& kind, int order) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  if (kind.is_logarithm() && order < 1) {
    throw std::invalid_argument("logarithm derivatives need order k >= 1");
  }
}

void require_point(int dimension, const SamplePoint& point) {
  if (point.dimension() != dimension) {
    throw std::invalid_argument("sample point has dimension " + std::to_string(point.dimension()) +
                                ", expected " + std::to_string(dimension));
  }
}

}  // namespace

namespace {

OracleLimits& thread_limits() {
  thread_local OracleLimits limits;
  return limits;
}

}  // namespace

OracleLimits oracle_limits() { return thread_limits(); }

ScopedOracleLimits::ScopedOracleLimits(OracleLimits limits) : saved_(thread_limits()) {
  thread_limits() = limits;
}

ScopedOracleLimits::~ScopedOracleLimits() { thread_limits() = saved_; }

void check_oracle_capacity(int dimension, int order) {
  const OracleLimits limits = thread_limits();
  if (dimension > limits.max_dimension || order > limits.max_order) {
    throw CapacityError("symbolic oracle is capped at N <= " + std::to_string(limits.max_dimension) +
                        " and k <= " + std::to_string(limits.max_order) + " (got N = " +
                        std::to_string(dimension) + ", k = " + std::to_string(order) + ")");
  }
}

Seed seed(int dimension, const NormKind& kind) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (kind.is_power()) return Seed{0, {TermSum::radial_power(dimension, kind.exponent())}};
  // d/dx_i log r = x_i r^{-2}
  Seed out{1, {}};
  for (int i = 0; i < dimension; ++i) {
    TermSum component(dimension, Rational(0));
    std::vector<int> powers(static_cast<std::size_t>(dimension), 0);
    powers[static_cast<std::size_t>(i)] = 1;
    component.add(Rational(1), powers, -2);
    out.components.push_back(std::move(component));
  }
  return out;
}

DerivativeTable::DerivativeTable(int dimension, NormKind kind)
    : dim_(dimension), kind_(std::move(kind)), seed_(seed(dimension, kind_)) {
  check_oracle_capacity(dimension, 0);
}

const TermSum& DerivativeTable::derivative(std::span<const int> indices) {
  std::vector<int> sorted(indices.begin(), indices.end());
  for (int i : sorted) {
    if (i < 0 || i >= dim_) throw std::out_of_range("derivative index out of range");
  }
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(sorted.size()) < seed_.order) {
    throw std::invalid_argument("logarithm derivatives need order k >= 1");
  }
  return lookup_sorted(sorted);
}

const TermSum& DerivativeTable::lookup_sorted(const std::vector<int>& sorted) {
  if (auto it = cache_.find(sorted); it != cache_.end()) return it->second;
  TermSum value = [&] {
    if (kind_.is_power() && sorted.empty()) return seed_.components.front();
    if (kind_.is_logarithm() && sorted.size() == 1) {
      return seed_.components[static_cast<std::size_t>(sorted.front())];
    }
    std::vector<int> parent(sorted.begin(), sorted.end() - 1);
    const TermSum& p = lookup_sorted(parent);
    return p.differentiate(sorted.back());
  }();
  return cache_.emplace(sorted, std::move(value)).first->second;
}

std::optional<Rational> RadialValue::exact() const {
  if (!exponent.is_integer() || exponent.to_integer() % 2 != 0) return std::nullopt;
  return coeff * radius_sq.pow(exponent.to_long() / 2);
}

Rational RadialValue::times_radial_power(const Rational& power) const {
  const Rational e = exponent + power;
  if (!e.is_integer() || e.to_integer() % 2 != 0) {
    throw std::domain_error("radial exponent " + e.to_string() + " is not an even integer");
  }
  return coeff * radius_sq.pow(e.to_long() / 2);
}

RadialValue grad_norm_sq(DerivativeTable& table, int order, const SamplePoint& point,
                         bool weighted) {
  require_order(table.kind(), order);
  check_oracle_capacity(table.dimension(), order);
  require_point(table.dimension(), point);
  const Rational& base = table.kind().exponent();
  const Rational radial = base - Rational(2 * order);

  Rational sum(0);
  if (weighted) {
    for_each_multiset(table.dimension(), order, [&](const Tuple& t) {
      const Rational v = table.derivative(t).evaluate_over(point, radial);
      sum += multinomial_weight(t) * v * v;
    });
  } else {
    for_each_tuple(table.dimension(), order, [&](const Tuple& t) {
      const Rational v = table.derivative(t).evaluate_over(point, radial);
      sum += v * v;
    });
  }
  return RadialValue{sum, Rational(2) * radial, point.radius_sq()};
}

RadialValue grad_norm_sq(int dimension, const NormKind& kind, int order, const SamplePoint& point,
                         bool weighted) {
  DerivativeTable table(dimension, kind);
  return grad_norm_sq(table, order, point, weighted);
}

Rational rescaled_norm_sq(DerivativeTable& table, int order, const SamplePoint& point,
                          bool weighted) {
  const RadialValue v = grad_norm_sq(table, order, point, weighted);
  return v.times_radial_power(Rational(2 * order) - Rational(2) * table.kind().exponent());
}

RadialValue tilde_norm_sq(int dimension, const NormKind& kind, int order,
                          const SamplePoint& point) {
  require_order(kind, order);
  check_oracle_capacity(dimension, order);
  require_point(dimension, point);
  DerivativeTable table(dimension, kind);
  const Rational radial = kind.exponent() - Rational(2 * order);
  Rational sum(0);
  for_each_multiset(dimension, order, [&](const Tuple& t) {
    const Rational v = table.derivative(t).evaluate_over(point, radial);
    sum += v * v;
  });
  return RadialValue{sum, Rational(2) * radial, point.radius_sq()};
}

VerifyReport verify_constancy(int dimension, const NormKind& kind, int order,
                              const std::vector<SamplePoint>& points, bool weighted) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.query = ConstantQuery{dimension, order, kind};
  report.query.validate();
  check_oracle_capacity(dimension, order);
  if (points.empty()) throw std::invalid_argument("verify_constancy needs at least one point");
  for (const auto& p : points) require_point(dimension, p);

  for (Method m : {Method::closed, Method::recursive, Method::special}) {
    if (auto v = evaluate(report.query, m)) report.method_values.push_back(std::move(*v));
  }

  DerivativeTable table(dimension, kind);
  for (const auto& p : points) {
    report.oracle_values.push_back(PointValue{p, rescaled_norm_sq(table, order, p, weighted)});
  }

  const Rational& first = report.oracle_values.front().rescaled;
  report.constant = std::all_of(report.oracle_values.begin(), report.oracle_values.end(),
                                [&](const PointValue& pv) { return pv.rescaled == first; });
  if (!report.constant) {
    report.detail = "oracle value depends on the sample point";
  } else {
    report.exact_match = true;
    for (const auto& mv : report.method_values) {
      if (mv.value != first) {
        report.exact_match = false;
        report.detail += to_string(mv.method) + " = " + mv.value.to_string() + " but oracle = " +
                         first.to_string() + "; ";
      }
    }
  }
  if (!report.detail.empty() && report.detail.back() == ' ') report.detail.resize(report.detail.size() - 2);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::pair<Rational, Rational> dimension_split_sides(int dimension, const NormKind& kind, int order,
                                                    const SamplePoint& point) {
  if (dimension < 2) throw std::invalid_argument("dimension splitting needs N >= 2");
  require_order(kind, order);
  check_oracle_capacity(dimension, order);
  require_point(dimension, point);
  DerivativeTable table(dimension, kind);
  const Rational lhs = grad_norm_sq(table, order, point, false).coeff;

  const Rational radial = kind.exponent() - Rational(2 * order);
  const int last = dimension - 1;
  Rational rhs(0);
  for (int j = 0; j <= order; ++j) {
    Rational inner(0);
    // i' ranges over I_{N-1}^j; the remaining k - j derivatives are along x_N.
    auto accumulate = [&](const Tuple& head) {
      Tuple full = head;
      full.insert(full.end(), static_cast<std::size_t>(order - j), last);
      const Rational v = table.derivative(full).evaluate_over(point, radial);
      inner += v * v;
    };
    if (j == 0) {
      accumulate({});
    } else {
      for_each_tuple(dimension - 1, j, accumulate);
    }
    rhs += binomial(Rational(order), j) * inner;
  }
  return {lhs, rhs};
}

bool dimension_split_check(int dimension, const NormKind& kind, int order,
                           const SamplePoint& point) {
  const auto [lhs, rhs] = dimension_split_sides(dimension, kind, order, point);
  return lhs == rhs;
}

TermSum squared_norm_sum(DerivativeTable& table, int order) {
  require_order(table.kind(), order);
  check_oracle_capacity(table.dimension(), order);
  TermSum total(table.dimension(), Rational(2) * table.kind().exponent());
  for_each_multiset(table.dimension(), order, [&](const Tuple& t) {
    const TermSum& d = table.derivative(t);
    total += (d * d) * multinomial_weight(t);
  });
  return total;
}

LaplacianStep laplacian_recursion_step(int dimension, int order) {
  if (order < 1) throw std::invalid_argument("recursion step needs k >= 1");
  check_oracle_capacity(dimension, order);
  DerivativeTable table(dimension, NormKind::power(Rational(2 - dimension)));
  LaplacianStep step{laplacian(squared_norm_sum(table, order - 1)),
                     TermSum::radial_power(dimension, Rational(2 * (2 - dimension - order)),
                                           Rational(2) * gamma_special(dimension, order)),
                     false};
  step.holds = step.lhs == step.rhs;
  return step;
}

LaplacianStep log_laplacian_recursion_step(int order) {
  if (order < 2) throw std::invalid_argument("logarithm recursion step needs k >= 2");
  check_oracle_capacity(2, order);
  DerivativeTable table(2, NormKind::logarithm());
  LaplacianStep step{laplacian(squared_norm_sum(table, order - 1)),
                     TermSum::radial_power(2, Rational(-2 * order),
                                           Rational(2) * ell2_special(order)),
                     false};
  step.holds = step.lhs == step.rhs;
  return step;
}

}  // namespace radnorm
