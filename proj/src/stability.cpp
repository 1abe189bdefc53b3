#include "gitq/stability.hpp"

#include <algorithm>

namespace gitq {

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::StrictlySemistable: return "strictly_semistable";
    case Stability::Unstable: return "unstable";
  }
  return "?";
}

std::string_view to_string(TestKind k) { return k == TestKind::Point ? "point" : "line"; }

std::vector<IndexSet> StabilityVerdict::point_witnesses() const {
  std::vector<IndexSet> out;
  for (const auto& w : witnesses) {
    if (w.kind == TestKind::Point) out.push_back(w.indices);
  }
  return out;
}

std::vector<IndexSet> StabilityVerdict::line_witnesses() const {
  std::vector<IndexSet> out;
  for (const auto& w : witnesses) {
    if (w.kind == TestKind::Line) out.push_back(w.indices);
  }
  return out;
}

std::vector<Witness> StabilityVerdict::equalities() const {
  std::vector<Witness> out;
  std::copy_if(witnesses.begin(), witnesses.end(), std::back_inserter(out), [](const Witness& w) { return w.gamma == 0; });
  return out;
}

StabilityVerdict classify_incidence(const IncidenceProfile& profile, const Polarization& m) {
  if (profile.size() != m.size()) {
    throw InputError("profile has " + std::to_string(profile.size()) + " points but polarization has " +
                     std::to_string(m.size()) + " weights");
  }
  std::vector<Witness> points;
  std::vector<Witness> lines;
  for (IndexSet block : profile.blocks()) {
    if (const auto g = gamma_point(m, block); g <= 0) points.push_back({TestKind::Point, block, g});
  }
  for (IndexSet line : profile.expanded_lines()) {
    if (const auto g = gamma_line(m, line); g <= 0) lines.push_back({TestKind::Line, line, g});
  }
  auto by_indices = [](const Witness& a, const Witness& b) { return a.indices < b.indices; };
  std::sort(points.begin(), points.end(), by_indices);
  std::sort(lines.begin(), lines.end(), by_indices);

  StabilityVerdict v;
  v.witnesses = std::move(points);
  v.witnesses.insert(v.witnesses.end(), lines.begin(), lines.end());
  const bool negative = std::any_of(v.witnesses.begin(), v.witnesses.end(), [](const Witness& w) { return w.gamma < 0; });
  v.status = negative ? Stability::Unstable : v.witnesses.empty() ? Stability::Stable : Stability::StrictlySemistable;
  return v;
}

StabilityVerdict classify_configuration(const PointConfiguration& cfg, const Polarization& m) {
  return classify_incidence(incidence_profile(cfg), m);
}

GenericStability generic_stability(const Polarization& m) {
  GenericStability out;
  out.verdict = classify_incidence(IncidenceProfile::generic(m.size()), m);
  switch (out.verdict.status) {
    case Stability::Stable: {
      const int dim = 2 * (m.size() - 4);
      if (dim < 0) throw InvariantError("stable general position with n < 4");
      out.quotient_dimension = dim;
      break;
    }
    case Stability::StrictlySemistable: break;
    case Stability::Unstable: out.semistable_locus_empty = true; break;
  }
  return out;
}

}  // namespace gitq
