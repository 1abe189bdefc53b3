#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gitq/core.hpp"

namespace gitq {

enum class Stability { Stable, StrictlySemistable, Unstable };
enum class TestKind { Point, Line };

std::string_view to_string(Stability s);
std::string_view to_string(TestKind k);

/// A coincidence block (Point) or the point set of a line (Line) whose slack
/// gamma is <= 0 under the polarization.
struct Witness {
  TestKind kind;
  IndexSet indices;
  std::int64_t gamma;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of the numerical criterion, with every witness that is not
/// strictly satisfied. Point witnesses come first, each group in canonical
/// index-set order.
struct StabilityVerdict {
  Stability status = Stability::Stable;
  std::vector<Witness> witnesses;

  std::vector<IndexSet> point_witnesses() const;
  std::vector<IndexSet> line_witnesses() const;
  std::vector<Witness> equalities() const;
};

/// Point test on every coincidence block (singletons included) and line test
/// on the expanded point set of every line of the profile.
StabilityVerdict classify_incidence(const IncidenceProfile& profile, const Polarization& m);

StabilityVerdict classify_configuration(const PointConfiguration& cfg, const Polarization& m);

struct GenericStability {
  StabilityVerdict verdict;
  /// 2(n-4) when points in general position are stable.
  std::optional<int> quotient_dimension;
  /// The semistable locus is empty iff general position is unstable.
  bool semistable_locus_empty = false;
};

GenericStability generic_stability(const Polarization& m);

}  // namespace gitq
