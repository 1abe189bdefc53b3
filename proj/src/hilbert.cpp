#include "gitq/hilbert.hpp"

#include <algorithm>

namespace gitq {
namespace {

std::int64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < r) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

Rational evaluate(const BracketMonomial& monomial, const PointConfiguration& cfg) {
  Rational v = 1;
  for (const auto& [a, b, c] : monomial) {
    v *= bracket(cfg[static_cast<std::size_t>(a)], cfg[static_cast<std::size_t>(b)], cfg[static_cast<std::size_t>(c)]);
  }
  return v;
}

}  // namespace

bool TableauPoint::admissible(TableauRule rule) const {
  const bool printed = 0 <= x && x <= y && y <= k && 0 <= z && z <= w && w <= 2 * k && 0 <= y + z - x &&
                       y + z - x <= 2 * k && x + y <= z && z <= y + k && z <= w && w <= k + z && 0 <= w + x - z &&
                       w + x - z <= k && w >= x + k;
  if (rule == TableauRule::Printed) return printed;
  return printed && w + z - x <= 3 * k;
}

std::int64_t tableau_count(std::int64_t k, TableauRule rule) {
  if (k < 0) throw InputError("k must be non-negative");
  std::int64_t count = 0;
  for (std::int64_t x = 0; x <= k; ++x) {
    for (std::int64_t y = x; y <= k; ++y) {
      for (std::int64_t z = 0; z <= 2 * k; ++z) {
        for (std::int64_t w = z; w <= std::min(2 * k, k + z); ++w) {
          if (TableauPoint{x, y, z, w, k}.admissible(rule)) ++count;
        }
      }
    }
  }
  return count;
}

std::int64_t hilbert_closed_form(std::int64_t k) {
  if (k < 0) throw InputError("k must be non-negative");
  const std::int64_t num = k * k * k * k + 6 * k * k * k + 15 * k * k + 18 * k;
  if (num % 8 != 0) throw InvariantError("closed form is not integral at k=" + std::to_string(k));
  return num / 8 + 1;
}

std::int64_t series_coefficient(std::int64_t k) {
  if (k < 0) throw InputError("k must be non-negative");
  return binomial(k + 5, 5) - binomial(k + 2, 5);
}

std::vector<HilbertRow> hilbert_table(std::int64_t kmax) {
  if (kmax < 0) throw InputError("kmax must be non-negative");
  std::vector<HilbertRow> rows;
  for (std::int64_t k = 0; k <= kmax; ++k) {
    rows.push_back({k, tableau_count(k), hilbert_closed_form(k), series_coefficient(k),
                    tableau_count(k, TableauRule::Printed)});
  }
  return rows;
}

bool series_check(std::int64_t kmax) {
  if (kmax < 0) throw InputError("kmax must be non-negative");
  std::vector<std::int64_t> dims;
  for (std::int64_t k = 0; k <= kmax; ++k) dims.push_back(tableau_count(k));
  return series_check(dims);
}

bool series_check(std::span<const std::int64_t> dims) {
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] != series_coefficient(static_cast<std::int64_t>(k))) return false;
  }
  return true;
}

const std::array<BracketMonomial, 6>& generator_monomials() {
  static const std::array<BracketMonomial, 6> t{{
      {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}},
      {{0, 1, 2}, {0, 2, 4}, {1, 3, 5}},
      {{0, 1, 2}, {0, 2, 3}, {1, 4, 5}},
      {{0, 1, 2}, {0, 1, 4}, {2, 3, 5}},
      {{0, 1, 2}, {0, 1, 3}, {2, 4, 5}},
      {{0, 1, 2}, {0, 1, 2}, {3, 4, 5}},
  }};
  return t;
}

const BracketMonomial& u_monomial() {
  static const BracketMonomial u{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}};
  return u;
}

std::array<int, 6> multidegree(const BracketMonomial& monomial) {
  std::array<int, 6> deg{};
  for (const auto& b : monomial) {
    for (int p : b) ++deg.at(static_cast<std::size_t>(p));
  }
  return deg;
}

BracketEvaluation evaluate_generators(const PointConfiguration& cfg) {
  if (cfg.size() != 6) throw InputError("bracket generators need 6 points, got " + std::to_string(cfg.size()));
  BracketEvaluation e;
  const auto& t = generator_monomials();
  for (std::size_t i = 0; i < t.size(); ++i) e.t[i] = evaluate(t[i], cfg);
  e.u = evaluate(u_monomial(), cfg);
  return e;
}

RelationResiduals verify_relations(const PointConfiguration& cfg) {
  const auto e = evaluate_generators(cfg);
  const auto& t = e.t;
  const Rational l = -t[0] + t[1] - t[2] - t[3] + t[4] - t[5];
  RelationResiduals r;
  r.residual_u = t[2] * t[3] - t[1] * t[4] + e.u - t[5] * l;
  r.residual_f3 = l * (t[0] * t[5] - t[1] * t[4]) - t[0] * t[2] * t[3];
  return r;
}

}  // namespace gitq
