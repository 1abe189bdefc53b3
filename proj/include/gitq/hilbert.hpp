#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gitq/core.hpp"

namespace gitq {

/// Which inequality system defines an admissible tableau vector.
///  - Printed: the (x, y, z, w) list as usually stated.
///  - Completed: Printed plus w + z - x <= 3k, which the alpha/beta form of
///    the same tableaux implies and the printed list omits.
enum class TableauRule { Printed, Completed };

struct TableauPoint {
  std::int64_t x, y, z, w, k;

  bool admissible(TableauRule rule = TableauRule::Completed) const;
};

/// Exhaustive count over 0 <= x <= y <= k, 0 <= z <= w <= 2k.
std::int64_t tableau_count(std::int64_t k, TableauRule rule = TableauRule::Completed);

/// (k^4 + 6k^3 + 15k^2 + 18k)/8 + 1; throws InvariantError if not integral.
std::int64_t hilbert_closed_form(std::int64_t k);

/// k-th coefficient of (1 - t^3)/(1 - t)^6, i.e. C(k+5,5) - C(k+2,5).
std::int64_t series_coefficient(std::int64_t k);

struct HilbertRow {
  std::int64_t k;
  std::int64_t tableau;
  std::int64_t closed_form;
  std::int64_t series;
  std::int64_t printed_rule;
};

std::vector<HilbertRow> hilbert_table(std::int64_t kmax);

/// True iff tableau_count(k) equals the series coefficient for all k <= kmax.
bool series_check(std::int64_t kmax);
/// Same comparison against caller-supplied dimensions (dims[k] for k = 0..).
bool series_check(std::span<const std::int64_t> dims);

/// A bracket [abc] as 0-based point indices.
using BracketIndices = std::array<int, 3>;
using BracketMonomial = std::vector<BracketIndices>;

/// t_0..t_5 then u, as bracket monomials in the six points.
const std::array<BracketMonomial, 6>& generator_monomials();
const BracketMonomial& u_monomial();

/// How many times each point occurs in a bracket monomial.
std::array<int, 6> multidegree(const BracketMonomial& monomial);

struct BracketEvaluation {
  std::array<Rational, 6> t;
  Rational u;
};

/// Throws InputError unless cfg has 6 points.
BracketEvaluation evaluate_generators(const PointConfiguration& cfg);

struct RelationResiduals {
  Rational residual_u;
  Rational residual_f3;
};

/// residual_u = t2 t3 - t1 t4 + u - t5 L and
/// residual_f3 = L (t0 t5 - t1 t4) - t0 t2 t3, where
/// L = -t0 + t1 - t2 - t3 + t4 - t5.
RelationResiduals verify_relations(const PointConfiguration& cfg);

}  // namespace gitq
