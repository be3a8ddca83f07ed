#include "radnorm/combinatorics.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace radnorm {

namespace {

std::vector<Integer>& factorial_table() {
  thread_local std::vector<Integer> table{Integer(1)};
  return table;
}

// nu -> [(nu)_0, (nu)_1, ...], extended on demand.
std::map<Rational, std::vector<Rational>>& falling_table() {
  thread_local std::map<Rational, std::vector<Rational>> table;
  return table;
}

void require_order(int k, const char* what) {
  if (k < 0) throw std::invalid_argument(std::string(what) + ": negative order");
}

}  // namespace

Integer factorial(int k) {
  require_order(k, "factorial");
  auto& table = factorial_table();
  while (static_cast<int>(table.size()) <= k) {
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  }
  return table[static_cast<std::size_t>(k)];
}

Rational pochhammer(const Rational& nu, int k) {
  require_order(k, "pochhammer");
  auto& row = falling_table()[nu];
  if (row.empty()) row.emplace_back(1);
  while (static_cast<int>(row.size()) <= k) {
    const long j = static_cast<long>(row.size()) - 1;
    row.push_back(row.back() * (nu - Rational(j)));
  }
  return row[static_cast<std::size_t>(k)];
}

Rational binomial(const Rational& nu, int k) {
  return pochhammer(nu, k) / Rational(factorial(k));
}

Rational pow2(int exponent) { return Rational(2).pow(exponent); }

void clear_combinatorics_cache() {
  factorial_table().assign(1, Integer(1));
  falling_table().clear();
}

}  // namespace radnorm
