#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gitq/core.hpp"

namespace gitq {

/// A stability chamber of the ordered weight simplex, keyed by which 2- and
/// 3-point coincidences are stable (gamma^C > 0). Indices refer to positions
/// in the weakly decreasing ordering of the weights.
struct Chamber {
  int n = 0;
  std::vector<IndexSet> stable_pairs;
  std::vector<IndexSet> stable_triples;
  Polarization sample;
  /// The stable sets U^C_K and U^L_J as labels such as "U^C_{45}" or
  /// "U^L_{234}"; collinear sets first, each group in canonical order.
  std::vector<std::string> u_sets;
};

/// Returned instead of a chamber when m sits on a wall or outside the region
/// where every weight is below |m|/3.
struct WallReport {
  Polarization sorted;
  /// Subsets K (1 <= |K| <= n-1, sorted positions) with gamma^C_K = 0.
  std::vector<IndexSet> zero_sets;
  /// Sorted positions i with m_i >= |m|/3.
  std::vector<int> heavy_points;
};

struct ChamberLookup {
  /// order[p] is the original (0-based) index of sorted position p.
  std::vector<int> order;
  std::variant<Chamber, WallReport> result;
};

/// Sorts m into weakly decreasing order (stable with respect to ties) and
/// locates its chamber, or reports the walls it lies on.
ChamberLookup stable_sets_of(const Polarization& m);

struct ChamberAtlas {
  int n = 0;
  std::int64_t bound = 0;
  /// Canonical order: lexicographic on (stable_pairs, stable_triples).
  std::vector<Chamber> chambers;
  /// Number of chambers already present with |m| <= bound - 9.
  std::size_t count_at_reduced_bound = 0;
  bool stabilized = false;
};

inline constexpr std::int64_t kStabilizationWindow = 9;

/// Smallest bound accepted for n (36 for n=5, 31 for n=6, n otherwise).
std::int64_t minimum_bound(int n);

/// Exhaustive scan of weakly decreasing integer polarizations with
/// |m| <= bound. `threads` = 0 means "use GITQ_THREADS or 1".
ChamberAtlas enumerate_chambers(int n, std::int64_t bound, unsigned threads = 0);

/// The surfaces realized as quotients for n = 5.
enum class N5Surface { P2, P2Blown1, P2Blown2, P2Blown3, P2Blown4, P1xP1 };

std::string_view to_string(N5Surface s);

/// Throws InputError unless `c` is one of the six n=5 chambers.
N5Surface n5_quotient_label(const Chamber& c);

}  // namespace gitq
