#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gitq/index_set.hpp"
#include "gitq/rational.hpp"

namespace gitq {

/// Positive integer weights m_1..m_n of the linearization L(m) on (P^2)^n.
class Polarization {
 public:
  /// Throws InputError unless 1 <= n <= 31 and every weight is positive.
  explicit Polarization(std::vector<std::int64_t> weights);

  /// Clears denominators of a positive rational vector to the primitive
  /// integer polarization on the same ray.
  static Polarization from_rationals(std::span<const Rational> weights);

  int size() const { return static_cast<int>(weights_.size()); }
  std::int64_t weight(int i) const { return weights_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::int64_t total() const { return total_; }

  /// Sum of the weights indexed by `s`; throws InputError if `s` reaches past n.
  std::int64_t weight_of(IndexSet s) const;

  /// m_i / |m|, the point of the rational simplex on this ray.
  RationalVector normalized() const;
  bool ray_equivalent(const Polarization& other) const;

  /// m + delta * e_i; throws InputError if the result is not positive.
  Polarization shifted(int i, std::int64_t delta) const;
  /// Drops the indexed weights (used for the reduced polarizations m', m'').
  Polarization without(IndexSet dropped) const;

  friend bool operator==(const Polarization&, const Polarization&) = default;

 private:
  std::vector<std::int64_t> weights_;
  std::int64_t total_ = 0;
};

/// gamma^C_K(m) = |m| - 3 sum_{k in K} m_k, the slack of the point test.
std::int64_t gamma_point(const Polarization& m, IndexSet coincident);
/// gamma^L_J(m) = 2|m| - 3 sum_{j in J} m_j, the slack of the line test.
std::int64_t gamma_line(const Polarization& m, IndexSet collinear);

/// Homogeneous coordinates of a point of P^2(Q); equality is projective.
class ProjectivePoint {
 public:
  ProjectivePoint(Rational x, Rational y, Rational z);
  explicit ProjectivePoint(std::array<Rational, 3> coords);

  const std::array<Rational, 3>& coords() const { return coords_; }
  const Rational& operator[](int i) const { return coords_.at(static_cast<std::size_t>(i)); }
  ProjectivePoint scaled(const Rational& factor) const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  std::array<Rational, 3> coords_;
};

using PointConfiguration = std::vector<ProjectivePoint>;
using Matrix3 = std::array<std::array<Rational, 3>, 3>;

Rational determinant(const Matrix3& a);
/// Applies `g` to the chosen representative: x -> g x.
ProjectivePoint apply(const Matrix3& g, const ProjectivePoint& p);
PointConfiguration apply(const Matrix3& g, const PointConfiguration& cfg);

/// [abc]: determinant of the matrix with columns a, b, c.
Rational bracket(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& c);

/// Combinatorial type of a configuration.
///
/// `blocks()` partitions {0..n-1} into coincidence classes, ordered by their
/// smallest index. `lines()` lists, for every projective line meeting at
/// least two blocks, the set of block positions on it (a subset of
/// {0..#blocks-1}); each pair of distinct blocks lies on exactly one listed
/// line.
class IncidenceProfile {
 public:
  /// Builds a profile from abstract incidences: points in one `coincident`
  /// set are equal, points in one `collinear` set share a line. Overlapping
  /// coincidences merge, lines through two common blocks merge, and every
  /// pair of blocks not already on a listed line gets its own two-block line.
  static IncidenceProfile from_incidences(int n, std::span<const IndexSet> coincident,
                                          std::span<const IndexSet> collinear);
  /// All points distinct, no three collinear.
  static IncidenceProfile generic(int n);

  int size() const { return n_; }
  const std::vector<IndexSet>& blocks() const { return blocks_; }
  const std::vector<IndexSet>& lines() const { return lines_; }

  /// Raw point indices lying on a line given by block positions.
  IndexSet expand(IndexSet block_positions) const;
  std::vector<IndexSet> expanded_lines() const;
  int block_of(int point) const;

  friend bool operator==(const IncidenceProfile&, const IncidenceProfile&) = default;
  friend IncidenceProfile incidence_profile(const PointConfiguration& cfg);

 private:
  IncidenceProfile(int n, std::vector<IndexSet> blocks, std::vector<IndexSet> lines);

  int n_ = 0;
  std::vector<IndexSet> blocks_;
  std::vector<IndexSet> lines_;
};

IncidenceProfile incidence_profile(const PointConfiguration& cfg);

}  // namespace gitq
