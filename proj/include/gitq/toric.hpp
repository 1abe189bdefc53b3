#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gitq/index_set.hpp"
#include "gitq/rational.hpp"

namespace gitq {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Diagonal action of a rank-r torus on C^d: row k of `weights` gives the
/// exponents of the k-th factor on z_1..z_d. Coordinates in `inverted` may
/// carry negative exponents (a chart localization).
struct TorusAction {
  IntMatrix weights;
  IndexSet inverted;

  int rank() const { return static_cast<int>(weights.size()); }
  int dim() const { return weights.empty() ? 0 : static_cast<int>(weights.front().size()); }
};

/// A relation prod T_g^{lhs_g} = prod T_g^{rhs_g} among the generators.
struct BinomialRelation {
  IntVector lhs;
  IntVector rhs;
  friend bool operator==(const BinomialRelation&, const BinomialRelation&) = default;
};

struct ToricModel {
  TorusAction action;
  /// Invariant monomials, lexicographically descending on exponent vectors.
  IntMatrix generators;
  std::vector<BinomialRelation> relations;
  bool relations_computed = false;
  bool smooth = false;
  /// Result of the check at degree_bound + 2; unset until performed.
  std::optional<bool> saturated;
  std::vector<std::string> warnings;
  /// Generators written in a basis of the lattice they generate.
  std::optional<IntMatrix> lattice_coordinates;
  std::optional<IntMatrix> cone_rays;
};

enum class SliceKind { PairPlusFourLine, TriplePairMatching, TriplePlusLine };
std::string_view to_string(SliceKind k);

TorusAction local_model_weights(SliceKind kind);

inline constexpr int kDefaultDegreeBound = 6;

/// Minimal invariant exponent vectors of total degree (L1 norm) at most
/// `degree_bound`, followed by a saturation check at degree_bound + 2.
ToricModel torus_invariant_basis(const TorusAction& action, int degree_bound = kDefaultDegreeBound);

/// Fills `relations` with a minimal generating set of binomial relations
/// whose monomials have degree at most `relation_degree_bound` under a
/// positive grading of the invariant lattice, and sets `smooth`.
ToricModel binomial_relations(ToricModel model, int relation_degree_bound = 2 * kDefaultDegreeBound);

/// Expresses the generators in a Hermite basis of the lattice they span and
/// attaches the rays of the dual cone.
ToricModel attach_cone_data(ToricModel model);

/// Raised when a cone does not have the shape an operation needs.
class ConeShapeError : public InputError {
 public:
  using InputError::InputError;
};

/// Primitive rays of the dual of the cone spanned by `generators`,
/// lexicographically ascending.
IntMatrix dual_cone_rays(const IntMatrix& generators);

struct AffineHyperplane {
  RationalVector normal;
  Rational offset;
};

/// Each ray scaled onto {y : normal . y = offset}, lexicographically ascending.
std::vector<RationalVector> polytope_section(const IntMatrix& rays, const AffineHyperplane& h);

std::vector<RationalVector> drop_coordinate(const std::vector<RationalVector>& points, int index);

enum class ConeSmoothness { Smooth, SimplicialSingular, NonSimplicial };
std::string_view to_string(ConeSmoothness s);

ConeSmoothness cone_smoothness(const IntMatrix& rays);

/// Rank over the rationals.
int matrix_rank(const IntMatrix& rows);

}  // namespace gitq
