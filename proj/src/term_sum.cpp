#include "radnorm/term_sum.hpp"

#include <numeric>
#include <stdexcept>

namespace radnorm {

int Monomial::degree() const { return std::accumulate(powers.begin(), powers.end(), 0); }

TermSum::TermSum(int dimension, Rational base) : dim_(dimension), base_(std::move(base)) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
}

TermSum TermSum::radial_power(int dimension, const Rational& exponent, const Rational& coeff) {
  TermSum out(dimension, exponent);
  out.add(coeff, std::vector<int>(static_cast<std::size_t>(dimension), 0), 0);
  return out;
}

std::vector<Term> TermSum::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(Term{c, m});
  return out;
}

void TermSum::add(const Rational& coeff, const std::vector<int>& powers, int offset) {
  if (coeff.is_zero()) return;
  if (static_cast<int>(powers.size()) != dim_) {
    throw std::invalid_argument("monomial has wrong number of coordinates");
  }
  const std::size_t last = powers.size() - 1;
  if (powers[last] >= 2) {
    // x_N^2 = r^2 - sum_{i<N} x_i^2
    std::vector<int> reduced = powers;
    reduced[last] -= 2;
    add(coeff, reduced, offset + 2);
    for (std::size_t i = 0; i < last; ++i) {
      std::vector<int> other = reduced;
      other[i] += 2;
      add(-coeff, other, offset);
    }
    return;
  }
  auto [it, inserted] = terms_.try_emplace(Monomial{powers, offset}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TermSum TermSum::differentiate(int axis) const {
  if (axis < 0 || axis >= dim_) throw std::out_of_range("axis out of range");
  const auto a = static_cast<std::size_t>(axis);
  TermSum out(dim_, base_);
  for (const auto& [m, c] : terms_) {
    if (m.powers[a] > 0) {
      std::vector<int> lowered = m.powers;
      --lowered[a];
      out.add(c * Rational(m.powers[a]), lowered, m.offset);
    }
    const Rational exponent = base_ + Rational(m.offset);
    if (!exponent.is_zero()) {
      std::vector<int> raised = m.powers;
      ++raised[a];
      out.add(c * exponent, raised, m.offset - 2);
    }
  }
  return out;
}

TermSum TermSum::rebased(const Rational& new_base) const {
  const Rational shift = base_ - new_base;
  if (!shift.is_integer()) throw std::invalid_argument("bases differ by a non-integer");
  const int d = static_cast<int>(shift.to_long());
  TermSum out(dim_, new_base);
  for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.powers, m.offset + d}, c);
  return out;
}

TermSum& TermSum::operator+=(const TermSum& rhs) {
  if (rhs.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  if (rhs.is_zero()) return *this;
  const TermSum aligned = rhs.base_ == base_ ? rhs : rhs.rebased(base_);
  for (const auto& [m, c] : aligned.terms_) add(c, m.powers, m.offset);
  return *this;
}

TermSum& TermSum::operator*=(const Rational& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& entry : terms_) entry.second *= factor;
  return *this;
}

TermSum operator*(const TermSum& lhs, const TermSum& rhs) {
  if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch");
  TermSum out(lhs.dim_, lhs.base_ + rhs.base_);
  std::vector<int> powers(static_cast<std::size_t>(lhs.dim_));
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < powers.size(); ++i) powers[i] = ma.powers[i] + mb.powers[i];
      out.add(ca * cb, powers, ma.offset + mb.offset);
    }
  }
  return out;
}

bool operator==(const TermSum& lhs, const TermSum& rhs) {
  if (lhs.dim_ != rhs.dim_) return false;
  if (lhs.is_zero() || rhs.is_zero()) return lhs.is_zero() && rhs.is_zero();
  if (!(lhs.base_ - rhs.base_).is_integer()) return false;
  const TermSum aligned = lhs.base_ == rhs.base_ ? rhs : rhs.rebased(lhs.base_);
  return lhs.terms_ == aligned.terms_;
}

Rational TermSum::evaluate_over(const SamplePoint& point, const Rational& radial_power) const {
  if (point.dimension() != dim_) throw std::invalid_argument("point has wrong dimension");
  const Rational& r2 = point.radius_sq();
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    const Rational e = base_ + Rational(m.offset) - radial_power;
    if (!e.is_integer() || e.to_integer() % 2 != 0) {
      throw std::domain_error("radial exponent " + e.to_string() + " is not an even integer");
    }
    Rational value = c * r2.pow(e.to_long() / 2);
    for (int i = 0; i < dim_; ++i) {
      const int p = m.powers[static_cast<std::size_t>(i)];
      if (p) value *= point[i].pow(p);
    }
    total += value;
  }
  return total;
}

int TermSum::homogeneity_offset() const {
  if (terms_.empty()) return 0;
  const int first = terms_.begin()->first.degree() + terms_.begin()->first.offset;
  for (const auto& entry : terms_) {
    if (entry.first.degree() + entry.first.offset != first) {
      throw std::logic_error("term sum is not homogeneous");
    }
  }
  return first;
}

bool TermSum::is_normalized() const {
  for (const auto& [m, c] : terms_) {
    if (c.is_zero() || m.powers.back() > 1) return false;
  }
  return true;
}

std::string TermSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    for (std::size_t i = 0; i < m.powers.size(); ++i) {
      if (m.powers[i] == 0) continue;
      out += "*x" + std::to_string(i + 1);
      if (m.powers[i] > 1) out += "^" + std::to_string(m.powers[i]);
    }
    const Rational e = base_ + Rational(m.offset);
    if (!e.is_zero()) out += "*r^(" + e.to_string() + ")";
  }
  return out;
}

TermSum laplacian(const TermSum& u) {
  TermSum out(u.dimension(), u.base());
  for (int i = 0; i < u.dimension(); ++i) out += u.differentiate(i).differentiate(i);
  return out;
}

TermSum divergence(const std::vector<TermSum>& field) {
  if (field.empty()) throw std::invalid_argument("empty vector field");
  const int n = field.front().dimension();
  if (static_cast<int>(field.size()) != n) throw std::invalid_argument("field size != dimension");
  TermSum out(n, field.front().base());
  for (int i = 0; i < n; ++i) out += field[static_cast<std::size_t>(i)].differentiate(i);
  return out;
}

}  // namespace radnorm
