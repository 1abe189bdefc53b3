#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gitq/core.hpp"
#include "gitq/stability.hpp"

namespace gitq {

enum class QuotientKind { Geometric, GeometricDivisible, LowerDimP1Pow5, LowerDimP1, Categorical };
enum class LocalModel { QuadricCone4, TripleCone4, Smooth4 };
enum class StratumKind { Curve, TriplePoint, SmoothPoint };

std::string_view to_string(QuotientKind k);
std::string_view to_string(LocalModel k);
std::string_view to_string(StratumKind k);

/// A strictly semistable stratum of the n=6 quotient: C_ij (one wall pair),
/// O_{ij,hl,kn} (a perfect matching into wall pairs) or O_hij (a wall triple).
struct Stratum {
  StratumKind kind;
  /// One set for curves and smooth points, three for triple points (sorted).
  std::vector<IndexSet> parts;

  std::string name() const;
  friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct QuotientReport {
  Polarization m;
  QuotientKind kind;
  std::vector<Stratum> curves;
  std::vector<Stratum> triple_points;
  std::vector<Stratum> smooth_points;
  /// m' or m'' for the lower-dimensional cases.
  std::optional<Polarization> reduced;
  /// Parallel to curves, then triple_points, then smooth_points.
  std::vector<std::pair<Stratum, LocalModel>> local_models;
};

/// Some weight exceeds |m|/3, so the semistable locus is empty.
struct EmptySemistableReport {
  Polarization m;
  GenericStability generic;
};

using QuotientClassification = std::variant<QuotientReport, EmptySemistableReport>;

/// Case split for n = 6 points; InputError for other n.
QuotientClassification classify_quotient_n6(const Polarization& m);

/// Dimension of the fiber of theta over a point coming from the wall
/// (J coincident, J' = complement collinear). `direction` = +1 for
/// m_hat -> m = m_hat + e_i, and -1 for m = m_hat - e_i.
int fiber_dimension(int n, int j_size, bool i_in_j, int direction);

enum class FiberType { Point, P1, P1UnionP1CommonPoint, P3, Other };
std::string_view to_string(FiberType t);

/// Which one-sided degeneration of a wall survives in X^S(m_hat).
enum class SurvivingSide { Coincidence, Collinearity };
std::string_view to_string(SurvivingSide s);

struct FiberReport {
  Stratum stratum;
  int dimension;
  FiberType type;
  /// For curves and smooth points; unset for triple points.
  std::optional<SurvivingSide> side;
  /// For triple points: 1-based numbers of the surviving degeneration
  /// families, ordered by pair of the matching, then by the other pair.
  std::vector<int> surviving_families;
};

struct RemovedSet {
  TestKind kind;
  IndexSet indices;
  friend bool operator==(const RemovedSet&, const RemovedSet&) = default;
};

struct WallCrossingReport {
  Polarization m_hat;
  Polarization m;
  int index;
  int direction;
  /// Degenerations that are semistable for m but unstable for m_hat.
  std::vector<RemovedSet> removed_from_semistable;
  std::vector<FiberReport> fibers;
};

/// The degeneration families adjacent to the triple point of a matching,
/// in the order used by `FiberReport::surviving_families`.
std::vector<IncidenceProfile> triple_point_families(const Stratum& triple_point);

/// Requires n = 6, m_hat and m differing by one in one coordinate,
/// 3 | |m|, 3 does not divide |m_hat|, all m_i < |m|/3 and X^S(m_hat) nonempty.
WallCrossingReport wall_crossing_report(const Polarization& m_hat, const Polarization& m);

}  // namespace gitq
