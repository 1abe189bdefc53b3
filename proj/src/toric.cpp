#include "gitq/toric.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace gitq {
namespace {

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_invariant(const TorusAction& a, const IntVector& e) {
  return std::all_of(a.weights.begin(), a.weights.end(), [&](const IntVector& row) { return dot(row, e) == 0; });
}

// Nonzero invariant exponent vectors with L1 norm <= bound.
std::set<IntVector> invariants_up_to(const TorusAction& a, int bound) {
  const int d = a.dim();
  std::set<IntVector> out;
  IntVector e(static_cast<std::size_t>(d), 0);
  auto rec = [&](auto&& self, int pos, int budget) -> void {
    if (pos == d) {
      if (budget != bound && is_invariant(a, e)) out.insert(e);
      return;
    }
    const int lo = a.inverted.contains(pos) ? -budget : 0;
    for (int v = lo; v <= budget; ++v) {
      e[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, budget - std::abs(v));
    }
    e[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

IntVector minus(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector image_of(const IntMatrix& generators, const IntVector& multi, std::size_t d) {
  IntVector img(d, 0);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (std::size_t i = 0; i < d; ++i) img[i] += multi[g] * generators[g][i];
  }
  return img;
}

// A linear functional positive on every generator: 1 on ordinary coordinates,
// searched over small values on the inverted ones.
std::optional<IntVector> positive_grading(const ToricModel& m) {
  const int d = m.action.dim();
  const auto inverted = m.action.inverted.indices();
  IntVector c(static_cast<std::size_t>(d), 1);
  constexpr int kRange = 4;
  std::optional<IntVector> found;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (found) return;
    if (k == inverted.size()) {
      if (std::all_of(m.generators.begin(), m.generators.end(), [&](const IntVector& g) { return dot(c, g) > 0; })) found = c;
      return;
    }
    for (int v : {0, 1, -1, 2, -2, 3, -3, kRange, -kRange}) {
      c[static_cast<std::size_t>(inverted[k])] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return found;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool supports_meet(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return true;
  }
  return false;
}

std::vector<std::vector<Rational>> to_rational(const IntMatrix& rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) {
    std::vector<Rational> q;
    for (auto v : r) q.emplace_back(static_cast<long>(v));
    out.push_back(std::move(q));
  }
  return out;
}

Rational rational_determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

// Row-style Hermite reduction; returns the nonzero rows, which form a basis
// of the lattice spanned by `rows` in echelon shape.
IntMatrix lattice_basis(IntMatrix rows) {
  if (rows.empty()) return {};
  const std::size_t d = rows.front().size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < d && top < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] != 0 && (best == rows.size() || std::abs(rows[r][col]) < std::abs(rows[best][col]))) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool reduced = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        const std::int64_t q = rows[r][col] / rows[top][col];
        if (q != 0) {
          for (std::size_t k = 0; k < d; ++k) rows[r][k] -= q * rows[top][k];
        }
        if (rows[r][col] != 0) reduced = false;
      }
      if (reduced) {
        if (rows[top][col] < 0) {
          for (auto& v : rows[top]) v = -v;
        }
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  return rows;
}

IntVector coordinates_in(const IntMatrix& basis, const IntVector& v) {
  IntVector rest = v;
  IntVector x(basis.size(), 0);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& row = basis[j];
    const auto pivot = static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](auto e) { return e != 0; }) - row.begin());
    if (rest[pivot] % row[pivot] != 0) throw InvariantError("vector is not in the lattice spanned by the basis");
    x[j] = rest[pivot] / row[pivot];
    for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= x[j] * row[k];
  }
  if (std::any_of(rest.begin(), rest.end(), [](auto e) { return e != 0; })) {
    throw InvariantError("vector is not in the span of the basis");
  }
  return x;
}

std::int64_t gcd_of(const IntVector& v) {
  std::int64_t g = 0;
  for (auto e : v) g = std::gcd(g, std::abs(e));
  return g;
}

}  // namespace

std::string_view to_string(SliceKind k) {
  switch (k) {
    case SliceKind::PairPlusFourLine: return "pair";
    case SliceKind::TriplePairMatching: return "matching";
    case SliceKind::TriplePlusLine: return "triple";
  }
  return "?";
}

TorusAction local_model_weights(SliceKind kind) {
  switch (kind) {
    case SliceKind::PairPlusFourLine: return {{{3, 3, -3, -3, 0}}, {}};
    case SliceKind::TriplePairMatching: return {{{-1, -2, 1, -1, 2, 1}, {1, -1, -1, -2, 1, 2}}, {}};
    case SliceKind::TriplePlusLine: return {{{3, 3, 3, 3, -3}}, {}};
  }
  throw InputError("unknown slice kind");
}

int matrix_rank(const IntMatrix& rows) {
  auto a = to_rational(rows);
  if (a.empty()) return 0;
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[rank][col];
      for (std::size_t k = col; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

ToricModel torus_invariant_basis(const TorusAction& action, int degree_bound) {
  if (degree_bound < 1) throw InputError("degree bound must be at least 1");
  if (action.weights.empty() || action.dim() == 0) throw InputError("torus action needs at least one weight row");
  for (const auto& row : action.weights) {
    if (static_cast<int>(row.size()) != action.dim()) throw InputError("weight rows have different lengths");
  }
  if (!action.inverted.subset_of(IndexSet::full(action.dim()))) throw InputError("inverted coordinate out of range");

  ToricModel model;
  model.action = action;
  const auto found = invariants_up_to(action, degree_bound);
  for (const auto& e : found) {
    const bool decomposable = std::any_of(found.begin(), found.end(), [&](const IntVector& f) {
      return f != e && found.contains(minus(e, f));
    });
    if (!decomposable) model.generators.push_back(e);
  }
  std::sort(model.generators.begin(), model.generators.end(), std::greater<>());
  if (model.generators.empty()) {
    model.warnings.push_back("no nonzero invariant monomial of degree <= " + std::to_string(degree_bound));
  }

  // Every invariant found two degrees higher must be a sum of generators;
  // the search descends along a grading that is positive on the generators.
  const auto grading = positive_grading(model);
  if (!grading) {
    model.saturated = false;
    model.warnings.push_back("no positive grading found on the generators; saturation not checked");
    return model;
  }
  const auto wider = invariants_up_to(action, degree_bound + 2);
  std::map<IntVector, bool> memo;
  std::function<bool(const IntVector&)> representable = [&](const IntVector& e) {
    if (std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; })) return true;
    if (dot(*grading, e) <= 0) return false;
    for (int i = 0; i < action.dim(); ++i) {
      if (!action.inverted.contains(i) && e[static_cast<std::size_t>(i)] < 0) return false;
    }
    if (auto it = memo.find(e); it != memo.end()) return it->second;
    const bool ok = std::any_of(model.generators.begin(), model.generators.end(),
                                [&](const IntVector& g) { return representable(minus(e, g)); });
    memo[e] = ok;
    return ok;
  };
  model.saturated = std::all_of(wider.begin(), wider.end(), representable);
  if (!*model.saturated) {
    model.warnings.push_back("generators do not produce every invariant of degree <= " + std::to_string(degree_bound + 2));
  }
  return model;
}

ToricModel binomial_relations(ToricModel model, int relation_degree_bound) {
  model.relations.clear();
  const std::size_t ng = model.generators.size();
  const auto d = static_cast<std::size_t>(model.action.dim());
  const int free_rank = model.action.dim() - matrix_rank(model.action.weights);

  const auto grading = positive_grading(model);
  if (!grading) {
    model.warnings.push_back("no positive grading found on the generators; relations not computed");
    model.relations_computed = false;
    model.smooth = false;
    return model;
  }
  IntVector deg(ng);
  for (std::size_t g = 0; g < ng; ++g) deg[g] = dot(*grading, model.generators[g]);

  // Fibers of the map from monomials in the generators to exponent vectors,
  // processed by increasing degree.
  std::map<std::pair<std::int64_t, IntVector>, std::vector<IntVector>> fibers;
  IntVector a(ng, 0);
  auto rec = [&](auto&& self, std::size_t g, std::int64_t used) -> void {
    if (g == ng) {
      if (used > 0) fibers[{used, image_of(model.generators, a, d)}].push_back(a);
      return;
    }
    for (std::int64_t k = 0; used + k * deg[g] <= relation_degree_bound; ++k) {
      a[g] = k;
      self(self, g + 1, used + k * deg[g]);
    }
    a[g] = 0;
  };
  rec(rec, 0, 0);

  for (auto& [key, monomials] : fibers) {
    if (monomials.size() < 2) continue;
    // Monomials sharing a generator are already joined by lower-degree moves.
    UnionFind uf(monomials.size());
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      for (std::size_t j = i + 1; j < monomials.size(); ++j) {
        if (supports_meet(monomials[i], monomials[j])) uf.unite(i, j);
      }
    }
    std::map<std::size_t, IntVector> rep;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      auto& r = rep[uf.find(i)];
      if (r.empty() || monomials[i] > r) r = monomials[i];
    }
    std::vector<IntVector> reps;
    for (auto& [root, r] : rep) reps.push_back(r);
    std::sort(reps.begin(), reps.end(), std::greater<>());
    for (std::size_t k = 1; k < reps.size(); ++k) model.relations.push_back({reps[0], reps[k]});
  }
  model.relations_computed = true;
  model.smooth = model.relations.empty() && static_cast<int>(ng) == free_rank;
  return model;
}

ToricModel attach_cone_data(ToricModel model) {
  const auto basis = lattice_basis(model.generators);
  IntMatrix coords;
  for (const auto& g : model.generators) coords.push_back(coordinates_in(basis, g));
  model.lattice_coordinates = coords;
  model.cone_rays = dual_cone_rays(coords);
  return model;
}

IntMatrix dual_cone_rays(const IntMatrix& generators) {
  if (generators.empty()) throw ConeShapeError("no generators given");
  const std::size_t d = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != d) throw ConeShapeError("generators have different lengths");
  }
  if (matrix_rank(generators) != static_cast<int>(d)) {
    throw ConeShapeError("generators span a proper subspace, so the dual cone is not pointed");
  }
  std::int64_t max_abs = 0;
  for (const auto& g : generators) {
    for (auto e : g) max_abs = std::max(max_abs, std::abs(e));
  }
  const std::int64_t radius = max_abs * static_cast<std::int64_t>(d);
  double box = 1;
  for (std::size_t i = 0; i < d; ++i) box *= static_cast<double>(2 * radius + 1);
  if (box > 5e7) throw ConeShapeError("search box for dual rays is too large");

  IntMatrix rays;
  IntVector v(d, -radius);
  for (;;) {
    if (gcd_of(v) == 1) {
      IntMatrix tight;
      bool inside = true;
      for (const auto& g : generators) {
        const auto p = dot(v, g);
        if (p < 0) {
          inside = false;
          break;
        }
        if (p == 0) tight.push_back(g);
      }
      if (inside && matrix_rank(tight) == static_cast<int>(d) - 1) rays.push_back(v);
    }
    std::size_t k = 0;
    while (k < d && v[k] == radius) v[k++] = -radius;
    if (k == d) break;
    ++v[k];
  }
  if (matrix_rank(rays) != static_cast<int>(d)) {
    throw ConeShapeError("dual rays do not span the space, so the input cone is not pointed");
  }
  std::sort(rays.begin(), rays.end());
  return rays;
}

std::vector<RationalVector> polytope_section(const IntMatrix& rays, const AffineHyperplane& h) {
  std::vector<RationalVector> out;
  for (const auto& r : rays) {
    if (r.size() != h.normal.size()) throw InputError("ray and hyperplane dimensions differ");
    Rational pairing = 0;
    for (std::size_t i = 0; i < r.size(); ++i) pairing += h.normal[i] * Rational(static_cast<long>(r[i]));
    if (pairing == 0) throw ConeShapeError("a ray is parallel to the hyperplane");
    if (pairing < 0) throw ConeShapeError("a ray points away from the hyperplane");
    const Rational t = h.offset / pairing;
    RationalVector p;
    for (auto e : r) p.push_back(t * Rational(static_cast<long>(e)));
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RationalVector> drop_coordinate(const std::vector<RationalVector>& points, int index) {
  std::vector<RationalVector> out;
  for (auto p : points) {
    if (index < 0 || index >= static_cast<int>(p.size())) throw InputError("coordinate index out of range");
    p.erase(p.begin() + index);
    out.push_back(std::move(p));
  }
  return out;
}

std::string_view to_string(ConeSmoothness s) {
  switch (s) {
    case ConeSmoothness::Smooth: return "smooth";
    case ConeSmoothness::SimplicialSingular: return "simplicial_singular";
    case ConeSmoothness::NonSimplicial: return "non_simplicial";
  }
  return "?";
}

ConeSmoothness cone_smoothness(const IntMatrix& rays) {
  if (rays.empty()) return ConeSmoothness::Smooth;
  const int r = matrix_rank(rays);
  if (static_cast<int>(rays.size()) != r) return ConeSmoothness::NonSimplicial;
  const auto d = static_cast<int>(rays.front().size());
  // gcd of the maximal minors decides whether the rays extend to a basis.
  Integer g = 0;
  std::vector<int> cols(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == r) {
      std::vector<std::vector<Rational>> sub;
      for (const auto& ray : rays) {
        std::vector<Rational> row;
        for (int c : cols) row.emplace_back(static_cast<long>(ray[static_cast<std::size_t>(c)]));
        sub.push_back(std::move(row));
      }
      const Rational det = rational_determinant(std::move(sub));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_num().get_mpz_t());
      return;
    }
    for (int c = start; c < d; ++c) {
      cols[static_cast<std::size_t>(pos)] = c;
      self(self, pos + 1, c + 1);
    }
  };
  rec(rec, 0, 0);
  return g == 1 ? ConeSmoothness::Smooth : ConeSmoothness::SimplicialSingular;
}

}  // namespace gitq
