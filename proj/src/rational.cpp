#include "radnorm/rational.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <ostream>
#include <sstream>

namespace radnorm {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(long numerator, long denominator)
    : Rational(Integer(numerator), Integer(denominator)) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty()) throw std::invalid_argument("empty rational");

  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

Integer Rational::to_integer() const {
  if (!is_integer()) throw std::domain_error("not an integer: " + to_string());
  return q_.get_num();
}

long Rational::to_long() const {
  const Integer v = to_integer();
  if (!v.fits_slong_p()) throw std::overflow_error("integer out of range: " + to_string());
  return v.get_si();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / pow(-exponent);
  }
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  // Powers of coprime integers stay coprime.
  mpq_class out;
  out.get_num() = num;
  out.get_den() = den;
  return Rational(std::move(out));
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_decimal(int significant_digits) const {
  // 4 bits per decimal digit plus slack keeps the requested digits exact.
  const auto bits = static_cast<mp_bitcnt_t>(64 + 4 * std::max(significant_digits, 1));
  mpf_class f(q_, bits);
  std::string fmt = "%." + std::to_string(std::max(significant_digits, 1)) + "Fg";
  const int len = gmp_snprintf(nullptr, 0, fmt.c_str(), f.get_mpf_t());
  std::string out(static_cast<std::size_t>(len) + 1, '\0');
  gmp_snprintf(out.data(), out.size(), fmt.c_str(), f.get_mpf_t());
  out.resize(static_cast<std::size_t>(len));
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

bool Rational::is_reduced() const {
  if (q_.get_den() <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return g == 1;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_rational_list(std::span<const Rational> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].to_string();
  }
  return out;
}

}  // namespace radnorm
