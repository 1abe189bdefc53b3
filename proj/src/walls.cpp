#include "gitq/walls.hpp"

#include <algorithm>
#include <array>

namespace gitq {
namespace {

constexpr int kSix = 6;

std::vector<Stratum> wall_sets(const Polarization& m, int size, StratumKind kind) {
  std::vector<Stratum> out;
  for (IndexSet k : subsets_of_size(m.size(), size)) {
    if (gamma_point(m, k) == 0) out.push_back({kind, {k}});
  }
  return out;
}

// Perfect matchings of {0..5} into pairs that all lie on walls.
std::vector<Stratum> wall_matchings(const std::vector<Stratum>& curves) {
  auto is_wall = [&](IndexSet p) {
    return std::any_of(curves.begin(), curves.end(), [&](const Stratum& c) { return c.parts.front() == p; });
  };
  std::vector<Stratum> out;
  std::vector<IndexSet> chosen;
  auto rec = [&](auto&& self, IndexSet used) -> void {
    if (used == IndexSet::full(kSix)) {
      out.push_back({StratumKind::TriplePoint, chosen});
      return;
    }
    const int first = used.complement(kSix).min_index();
    for (int j = first + 1; j < kSix; ++j) {
      const IndexSet pair{first, j};
      if (used.contains(j) || !is_wall(pair)) continue;
      chosen.push_back(pair);
      self(self, used | pair);
      chosen.pop_back();
    }
  };
  rec(rec, IndexSet{});
  return out;
}

bool stable_under(const IncidenceProfile& p, const Polarization& m) {
  return classify_incidence(p, m).status == Stability::Stable;
}

IncidenceProfile coincidence_family(int n, IndexSet j) {
  const std::array<IndexSet, 1> c{j};
  return IncidenceProfile::from_incidences(n, c, {});
}

IncidenceProfile collinear_family(int n, IndexSet j_prime) {
  const std::array<IndexSet, 1> l{j_prime};
  return IncidenceProfile::from_incidences(n, {}, l);
}

struct FamilySpec {
  IndexSet coincident;
  IndexSet collinear;
};

std::vector<FamilySpec> family_specs(const Stratum& t) {
  std::vector<FamilySpec> out;
  for (IndexSet p : t.parts) {
    for (IndexSet q : t.parts) {
      if (p == q) continue;
      out.push_back({p, q.with(p.min_index())});
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(QuotientKind k) {
  switch (k) {
    case QuotientKind::Geometric: return "geometric";
    case QuotientKind::GeometricDivisible: return "geometric_divisible";
    case QuotientKind::LowerDimP1Pow5: return "lower_dim_p1_pow5";
    case QuotientKind::LowerDimP1: return "lower_dim_p1";
    case QuotientKind::Categorical: return "categorical";
  }
  return "?";
}

std::string_view to_string(LocalModel k) {
  switch (k) {
    case LocalModel::QuadricCone4: return "quadric_cone4";
    case LocalModel::TripleCone4: return "triple_cone4";
    case LocalModel::Smooth4: return "smooth4";
  }
  return "?";
}

std::string_view to_string(StratumKind k) {
  switch (k) {
    case StratumKind::Curve: return "curve";
    case StratumKind::TriplePoint: return "triple_point";
    case StratumKind::SmoothPoint: return "smooth_point";
  }
  return "?";
}

std::string_view to_string(FiberType t) {
  switch (t) {
    case FiberType::Point: return "point";
    case FiberType::P1: return "P1";
    case FiberType::P1UnionP1CommonPoint: return "P1_union_P1_common_point";
    case FiberType::P3: return "P3";
    case FiberType::Other: return "other";
  }
  return "?";
}

std::string_view to_string(SurvivingSide s) {
  return s == SurvivingSide::Coincidence ? "coincidence" : "collinearity";
}

std::string Stratum::name() const {
  std::string body;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) body += ",";
    body += parts[i].label();
  }
  return (kind == StratumKind::Curve ? "C_{" : "O_{") + body + "}";
}

QuotientClassification classify_quotient_n6(const Polarization& m) {
  if (m.size() != kSix) throw InputError("quotient classification needs n=6, got n=" + std::to_string(m.size()));
  const std::int64_t total = m.total();
  std::vector<int> heavy;
  for (int i = 0; i < kSix; ++i) {
    if (3 * m.weight(i) > total) return EmptySemistableReport{m, generic_stability(m)};
    if (3 * m.weight(i) == total) heavy.push_back(i);
  }

  QuotientReport r{m, QuotientKind::Geometric, {}, {}, {}, std::nullopt, {}};
  if (total % 3 != 0) return r;

  if (heavy.size() == 1) {
    r.kind = QuotientKind::LowerDimP1Pow5;
    r.reduced = m.without(IndexSet{heavy[0]});
    return r;
  }
  if (heavy.size() == 2) {
    r.kind = QuotientKind::LowerDimP1;
    r.reduced = m.without(IndexSet{heavy[0], heavy[1]});
    return r;
  }
  if (!heavy.empty()) throw InvariantError("three weights equal to |m|/3 with positive remaining weights");

  r.curves = wall_sets(m, 2, StratumKind::Curve);
  r.triple_points = wall_matchings(r.curves);
  r.smooth_points = wall_sets(m, 3, StratumKind::SmoothPoint);
  r.kind = r.curves.empty() && r.smooth_points.empty() ? QuotientKind::GeometricDivisible : QuotientKind::Categorical;
  for (const auto& s : r.curves) r.local_models.emplace_back(s, LocalModel::QuadricCone4);
  for (const auto& s : r.triple_points) r.local_models.emplace_back(s, LocalModel::TripleCone4);
  for (const auto& s : r.smooth_points) r.local_models.emplace_back(s, LocalModel::Smooth4);
  return r;
}

int fiber_dimension(int n, int j_size, bool i_in_j, int direction) {
  if (direction != 1 && direction != -1) throw InputError("direction must be +1 or -1");
  if (j_size < 2 || j_size > n - 3) {
    throw InputError("|J| must lie in 2..n-3, got |J|=" + std::to_string(j_size) + " for n=" + std::to_string(n));
  }
  const int j_prime = n - j_size;
  const bool coincident_side = (direction == 1) == i_in_j;
  return coincident_side ? n - j_size - 3 : 2 * (n - j_prime - 1) - 1;
}

std::vector<IncidenceProfile> triple_point_families(const Stratum& triple_point) {
  if (triple_point.kind != StratumKind::TriplePoint) throw InputError("not a triple point stratum");
  std::vector<IncidenceProfile> out;
  for (const auto& f : family_specs(triple_point)) {
    const std::array<IndexSet, 1> c{f.coincident};
    const std::array<IndexSet, 1> l{f.collinear};
    out.push_back(IncidenceProfile::from_incidences(kSix, c, l));
  }
  return out;
}

WallCrossingReport wall_crossing_report(const Polarization& m_hat, const Polarization& m) {
  if (m.size() != kSix || m_hat.size() != kSix) throw InputError("wall crossing reports need n=6");
  int index = -1;
  for (int i = 0; i < kSix; ++i) {
    if (m.weight(i) == m_hat.weight(i)) continue;
    if (index != -1) throw InputError("m_hat and m differ in more than one coordinate");
    index = i;
  }
  if (index == -1) throw InputError("m_hat equals m");
  const std::int64_t diff = m.weight(index) - m_hat.weight(index);
  if (diff != 1 && diff != -1) throw InputError("m_hat and m must differ by exactly 1");
  const int direction = static_cast<int>(diff);
  if (m.total() % 3 != 0) throw InputError("|m| must be divisible by 3");
  if (m_hat.total() % 3 == 0) throw InputError("|m_hat| must not be divisible by 3");
  if (generic_stability(m_hat).verdict.status != Stability::Stable) throw InputError("X^S(m_hat) is empty");

  const auto classification = classify_quotient_n6(m);
  const auto* q = std::get_if<QuotientReport>(&classification);
  if (q == nullptr || q->kind == QuotientKind::LowerDimP1Pow5 || q->kind == QuotientKind::LowerDimP1) {
    throw InputError("wall crossing needs every m_i < |m|/3");
  }

  WallCrossingReport r{m_hat, m, index, direction, {}, {}};

  auto one_sided = [&](const Stratum& s) {
    const IndexSet j = s.parts.front();
    const IndexSet j_prime = j.complement(kSix);
    const bool coincidence_ok = stable_under(coincidence_family(kSix, j), m_hat);
    const bool collinear_ok = stable_under(collinear_family(kSix, j_prime), m_hat);
    if (coincidence_ok == collinear_ok) {
      throw InvariantError("both or neither degeneration of " + s.name() + " survive in X^S(m_hat)");
    }
    const bool i_in_j = j.contains(index);
    const bool expect_coincidence = (direction == 1) == i_in_j;
    if (coincidence_ok != expect_coincidence) throw InvariantError("surviving side of " + s.name() + " contradicts the membership rule");
    r.removed_from_semistable.push_back(coincidence_ok ? RemovedSet{TestKind::Line, j_prime} : RemovedSet{TestKind::Point, j});

    FiberReport f{s, fiber_dimension(kSix, j.size(), i_in_j, direction), FiberType::Other,
                  coincidence_ok ? SurvivingSide::Coincidence : SurvivingSide::Collinearity, {}};
    if (s.kind == StratumKind::Curve && f.dimension == 1) {
      f.type = FiberType::P1;
    } else if (s.kind == StratumKind::SmoothPoint && f.dimension == 3 && !coincidence_ok) {
      f.type = FiberType::P3;
    } else if (f.dimension == 0) {
      f.type = FiberType::Point;
    }
    r.fibers.push_back(std::move(f));
  };

  for (const auto& s : q->curves) one_sided(s);

  for (const auto& t : q->triple_points) {
    const auto specs = family_specs(t);
    const auto families = triple_point_families(t);
    FiberReport f{t, 0, FiberType::Other, std::nullopt, {}};
    for (std::size_t k = 0; k < families.size(); ++k) {
      if (stable_under(families[k], m_hat)) f.surviving_families.push_back(static_cast<int>(k) + 1);
    }
    // The pair through i carries the wall that governs the fiber dimension.
    const auto through_i = std::find_if(t.parts.begin(), t.parts.end(), [&](IndexSet p) { return p.contains(index); });
    if (through_i == t.parts.end()) throw InvariantError("matching does not cover index " + std::to_string(index + 1));
    f.dimension = fiber_dimension(kSix, through_i->size(), true, direction);
    if (f.surviving_families.size() == 2) {
      const auto& a = specs[static_cast<std::size_t>(f.surviving_families[0] - 1)];
      const auto& b = specs[static_cast<std::size_t>(f.surviving_families[1] - 1)];
      const std::array<IndexSet, 2> c{a.coincident, b.coincident};
      const std::array<IndexSet, 2> l{a.collinear, b.collinear};
      const auto common = IncidenceProfile::from_incidences(kSix, c, l);
      if (stable_under(common, m_hat)) f.type = FiberType::P1UnionP1CommonPoint;
    }
    r.fibers.push_back(std::move(f));
  }

  for (const auto& s : q->smooth_points) one_sided(s);
  return r;
}

}  // namespace gitq
