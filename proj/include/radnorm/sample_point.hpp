#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "radnorm/rational.hpp"

namespace radnorm {

/// A nonzero point of Q^N.
class SamplePoint {
public:
  /// Throws std::invalid_argument for an empty or all-zero coordinate list.
  explicit SamplePoint(std::vector<Rational> coordinates);
  static SamplePoint parse(std::string_view text);

  int dimension() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coordinates() const { return coords_; }
  const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  /// r^2 = sum x_i^2, always positive.
  const Rational& radius_sq() const { return radius_sq_; }

  std::string to_string() const;
  friend bool operator==(const SamplePoint& a, const SamplePoint& b) { return a.coords_ == b.coords_; }

private:
  std::vector<Rational> coords_;
  Rational radius_sq_;
};

/// Deterministic points e_1, (1,...,1), (1,2,...,N) and (3,4,0,...,0) (N >= 2),
/// duplicates removed, followed by `random_count` seeded points whose
/// coordinates have numerators in [-7, 7] and denominators in [1, 7].
std::vector<SamplePoint> default_sample_points(int dimension, int random_count, std::uint64_t seed);

/// Exactly `count` points: the deterministic ones first (truncated if
/// needed), then seeded random points.
std::vector<SamplePoint> sample_points(int dimension, int count, std::uint64_t seed);

/// Seeded rationals p/q with |p| <= max_abs_numerator, 1 <= q <= max_denominator.
std::vector<Rational> random_rationals(int count, std::uint64_t seed, int max_abs_numerator = 7,
                                       int max_denominator = 7);

}  // namespace radnorm
