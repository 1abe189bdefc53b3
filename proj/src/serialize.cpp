#include "gitq/serialize.hpp"

#include <charconv>
#include <sstream>

namespace gitq {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

Json sets(const std::vector<IndexSet>& v) {
  Json a = Json::array();
  for (IndexSet s : v) a.push_back(to_json(s));
  return a;
}

Json strata(const std::vector<Stratum>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s.parts.size() == 1 ? to_json(s.parts.front()) : sets(s.parts));
  return a;
}

Json witness_json(const Witness& w) {
  return Json{{"kind", to_string(w.kind)}, {"indices", to_json(w.indices)}, {"gamma", std::to_string(w.gamma)}};
}

Json int_matrix(const IntMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

}  // namespace

Polarization parse_polarization(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InputError("empty polarization");
  RationalVector values;
  for (auto part : split(text, ',')) {
    const Rational q = parse_rational(trim(part));
    if (q <= 0) throw InputError("weights must be positive, got '" + std::string(trim(part)) + "'");
    values.push_back(q);
  }
  return Polarization::from_rationals(values);
}

IndexSet parse_index_list(std::string_view text, int n) {
  std::vector<int> idx;
  for (auto part : split(trim(text), ',')) {
    part = trim(part);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size()) throw InputError("malformed index '" + std::string(part) + "'");
    idx.push_back(v);
  }
  return IndexSet::from_one_based(idx, n);
}

PointConfiguration parse_points(std::istream& in) {
  PointConfiguration cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::istringstream fields{std::string(t)};
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.size() != 3) {
      throw InputError("line " + std::to_string(line_no) + ": expected 3 coordinates, got " + std::to_string(tokens.size()));
    }
    try {
      cfg.emplace_back(parse_rational(tokens[0]), parse_rational(tokens[1]), parse_rational(tokens[2]));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

Json to_json(IndexSet s) { return s.one_based(); }

Json to_json(const Polarization& m) {
  Json a = Json::array();
  for (auto w : m.weights()) a.push_back(std::to_string(w));
  return a;
}

Json to_json(const StabilityVerdict& v) {
  Json points = Json::array(), lines = Json::array(), eq = Json::array();
  for (IndexSet s : v.point_witnesses()) points.push_back(to_json(s));
  for (IndexSet s : v.line_witnesses()) lines.push_back(to_json(s));
  for (const auto& w : v.equalities()) eq.push_back(witness_json(w));
  Json all = Json::array();
  for (const auto& w : v.witnesses) all.push_back(witness_json(w));
  return Json{{"status", to_string(v.status)},
              {"point_witnesses", points},
              {"line_witnesses", lines},
              {"equalities", eq},
              {"witnesses", all}};
}

Json to_json(const GenericStability& g) {
  Json j = to_json(g.verdict);
  j["quotient_dimension"] = g.quotient_dimension ? Json(*g.quotient_dimension) : Json(nullptr);
  j["semistable_locus_empty"] = g.semistable_locus_empty;
  return j;
}

Json to_json(const Chamber& c) {
  Json j{{"n", c.n},
         {"stable_pairs", sets(c.stable_pairs)},
         {"stable_triples", sets(c.stable_triples)},
         {"sample", to_json(c.sample)},
         {"u_sets", c.u_sets}};
  if (c.n == 5) j["label"] = to_string(n5_quotient_label(c));
  return j;
}

Json to_json(const ChamberAtlas& atlas) {
  Json chambers = Json::array();
  for (const auto& c : atlas.chambers) chambers.push_back(to_json(c));
  return Json{{"n", atlas.n},
              {"bound", std::to_string(atlas.bound)},
              {"count", atlas.chambers.size()},
              {"count_at_reduced_bound", atlas.count_at_reduced_bound},
              {"stabilized", atlas.stabilized},
              {"chambers", chambers}};
}

Json atlas_document(const ChamberAtlas& atlas) {
  Json j{{"schema", kSchema}};
  j.update(to_json(atlas));
  return j;
}

Json to_json(const ChamberLookup& lookup) {
  Json order = Json::array();
  for (int i : lookup.order) order.push_back(i + 1);
  Json j{{"order", order}};
  if (const auto* c = std::get_if<Chamber>(&lookup.result)) {
    j["chamber"] = to_json(*c);
  } else {
    const auto& w = std::get<WallReport>(lookup.result);
    Json heavy = Json::array();
    for (int i : w.heavy_points) heavy.push_back(i + 1);
    j["wall"] = Json{{"sorted", to_json(w.sorted)}, {"zero_sets", sets(w.zero_sets)}, {"heavy_points", heavy}};
  }
  return j;
}

Json to_json(const QuotientClassification& q) {
  if (const auto* e = std::get_if<EmptySemistableReport>(&q)) {
    return Json{{"m", to_json(e->m)}, {"kind", "semistable_locus_empty"}, {"generic", to_json(e->generic)}};
  }
  const auto& r = std::get<QuotientReport>(q);
  Json models = Json::object();
  for (const auto& [s, model] : r.local_models) models[s.name()] = to_string(model);
  return Json{{"m", to_json(r.m)},
              {"kind", to_string(r.kind)},
              {"curves", strata(r.curves)},
              {"triple_points", strata(r.triple_points)},
              {"smooth_points", strata(r.smooth_points)},
              {"reduced", r.reduced ? to_json(*r.reduced) : Json(nullptr)},
              {"local_models", models}};
}

Json to_json(const WallCrossingReport& r) {
  Json removed = Json::array();
  for (const auto& s : r.removed_from_semistable) {
    removed.push_back(Json{{"kind", to_string(s.kind)}, {"indices", to_json(s.indices)}});
  }
  Json fibers = Json::array();
  for (const auto& f : r.fibers) {
    fibers.push_back(Json{{"stratum", f.stratum.name()},
                          {"stratum_kind", to_string(f.stratum.kind)},
                          {"dimension", f.dimension},
                          {"type", to_string(f.type)},
                          {"surviving_side", f.side ? Json(to_string(*f.side)) : Json(nullptr)},
                          {"surviving_families", f.surviving_families}});
  }
  return Json{{"m_hat", to_json(r.m_hat)},
              {"m", to_json(r.m)},
              {"index", r.index + 1},
              {"direction", r.direction},
              {"removed_from_semistable", removed},
              {"fibers", fibers}};
}

Json to_json(const ToricModel& m) {
  Json rel = Json::array();
  for (const auto& r : m.relations) rel.push_back(Json::array({r.lhs, r.rhs}));
  Json j{{"weights", int_matrix(m.action.weights)},
         {"inverted", to_json(m.action.inverted)},
         {"generators", int_matrix(m.generators)},
         {"relations", rel},
         {"smooth", m.smooth},
         {"saturated", m.saturated ? Json(*m.saturated) : Json(nullptr)},
         {"warnings", m.warnings}};
  j["lattice_coordinates"] = m.lattice_coordinates ? int_matrix(*m.lattice_coordinates) : Json(nullptr);
  j["rays"] = m.cone_rays ? int_matrix(*m.cone_rays) : Json(nullptr);
  j["cone"] = m.cone_rays ? Json(to_string(cone_smoothness(*m.cone_rays))) : Json(nullptr);
  return j;
}

Json to_json(const std::vector<HilbertRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    a.push_back(Json{{"k", r.k},
                     {"tableau_count", r.tableau},
                     {"closed_form", r.closed_form},
                     {"series_coefficient", r.series},
                     {"printed_rule_count", r.printed_rule}});
  }
  return a;
}

}  // namespace gitq
