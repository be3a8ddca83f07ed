#include "radnorm/sample_point.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace radnorm {

namespace {

// Raw engine output only: std distributions differ between standard libraries.
Rational draw(std::mt19937_64& gen, int max_abs_numerator, int max_denominator) {
  const auto span = static_cast<std::uint64_t>(2 * max_abs_numerator + 1);
  const long num = static_cast<long>(gen() % span) - max_abs_numerator;
  const long den = 1 + static_cast<long>(gen() % static_cast<std::uint64_t>(max_denominator));
  return Rational(num, den);
}

}  // namespace

SamplePoint::SamplePoint(std::vector<Rational> coordinates) : coords_(std::move(coordinates)) {
  if (coords_.empty()) throw std::invalid_argument("sample point needs at least one coordinate");
  for (const auto& c : coords_) radius_sq_ += c * c;
  if (radius_sq_.is_zero()) throw std::invalid_argument("sample point must be nonzero");
}

SamplePoint SamplePoint::parse(std::string_view text) {
  return SamplePoint(parse_rational_list(text));
}

std::string SamplePoint::to_string() const { return format_rational_list(coords_); }

std::vector<Rational> random_rationals(int count, std::uint64_t seed, int max_abs_numerator,
                                       int max_denominator) {
  std::mt19937_64 gen(seed);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) out.push_back(draw(gen, max_abs_numerator, max_denominator));
  return out;
}

std::vector<SamplePoint> default_sample_points(int dimension, int random_count, std::uint64_t seed) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  const auto n = static_cast<std::size_t>(dimension);
  std::vector<SamplePoint> points;
  auto push_unique = [&](std::vector<Rational> coords) {
    SamplePoint p(std::move(coords));
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(std::move(p));
  };

  std::vector<Rational> e1(n, Rational(0));
  e1[0] = Rational(1);
  push_unique(e1);
  push_unique(std::vector<Rational>(n, Rational(1)));
  std::vector<Rational> ramp;
  for (int i = 1; i <= dimension; ++i) ramp.emplace_back(i);
  push_unique(ramp);
  if (dimension >= 2) {
    std::vector<Rational> pythagorean(n, Rational(0));
    pythagorean[0] = Rational(3);
    pythagorean[1] = Rational(4);
    push_unique(pythagorean);
  }

  std::mt19937_64 gen(seed);
  int added = 0;
  while (added < random_count) {
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < n; ++i) coords.push_back(draw(gen, 7, 7));
    if (std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c.is_zero(); })) {
      continue;
    }
    points.emplace_back(std::move(coords));
    ++added;
  }
  return points;
}

std::vector<SamplePoint> sample_points(int dimension, int count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("need at least one sample point");
  auto points = default_sample_points(dimension, 0, seed);
  const int fixed = static_cast<int>(points.size());
  if (fixed >= count) {
    points.resize(static_cast<std::size_t>(count), points.front());
    return points;
  }
  return default_sample_points(dimension, count - fixed, seed);
}

}  // namespace radnorm
