#pragma once

#include <cstdint>
#include <random>

#include "gitq/core.hpp"

namespace gitq {

/// Seeded source of exact random data. Values are derived from the raw
/// mt19937_64 stream by modular reduction, so a seed yields the same data
/// with every standard library.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// Numerator in [-1000, 1000], denominator in [1, max_den].
  Rational rational(std::int64_t max_den = 1000);
  Rational nonzero_rational(std::int64_t max_den = 1000);

  ProjectivePoint point();
  PointConfiguration configuration(int n);
  /// Random points with some forced coincidences and some points placed on
  /// the line through two earlier points.
  PointConfiguration degenerate_configuration(int n);

  /// Product of random shears: determinant exactly 1.
  Matrix3 unimodular();
  /// Nonzero determinant.
  Matrix3 invertible();

  Polarization polarization(int n, std::int64_t max_weight);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gitq
