// Prints one [PASS]/[FAIL] line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "gitq/cli.hpp"
#include "gitq/hilbert.hpp"
#include "gitq/sampling.hpp"
#include "gitq/toric.hpp"
#include "gitq/walls.hpp"
#include "oracles.hpp"

using namespace gitq;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Json labels(const std::string& s) {
  Json out = Json::array();
  auto ws = words(s);
  std::sort(ws.begin(), ws.end());
  for (const auto& w : ws) {
    Json set = Json::array();
    for (char c : w) set.push_back(c - '0');
    out.push_back(set);
  }
  return out;
}

Outcome criterion1() {
  const auto r = cli::run({"chambers", "--n", "5", "--bound", "40", "--threads", "1", "--json"});
  if (r.exit_code != 0) return {false, "command failed"};
  const auto p = Json::parse(r.output)["payload"];
  std::set<std::set<std::string>> got;
  for (const auto& c : p["chambers"]) got.insert(c["u_sets"].get<std::set<std::string>>());
  const std::vector<std::string> cases{"L234 L134 L124 L123 L125", "L234 L134 L124 L125 C45", "L234 L134 L125 C35 C45",
                                       "L234 L125 C25 C35 C45",    "L234 L134 C34 C35 C45",   "L125 C15 C25 C35 C45"};
  std::set<std::set<std::string>> want;
  for (const auto& c : cases) {
    std::set<std::string> s;
    for (const auto& w : words(c)) s.insert("U^" + w.substr(0, 1) + "_{" + w.substr(1) + "}");
    want.insert(s);
  }
  const bool ok = p["count"] == 6 && got == want;
  return {ok, "6 chambers, cases 0,1,2,3a,3b,4 matched=" + std::string(got == want ? "yes" : "no")};
}

Outcome criterion2() {
  const auto r = cli::run({"chambers", "--n", "6", "--bound", "40", "--json"});
  if (r.exit_code != 0) return {false, "command failed"};
  const auto p = Json::parse(r.output)["payload"];
  const std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> table{
      {"16 26 36 46 56", {{"", "222221"}}},
      {"16 26 36 45 46 56", {{"", "333221"}, {"456", "444221"}}},
      {"34 35 36 45 46 56",
       {{"", "221111"}, {"456", "332111"}, {"456 356", "442211"}, {"456 356 346", "552221"}, {"456 356 346 345", "331111"}}},
      {"25 26 35 36 45 46 56", {{"", "322211"}, {"456", "433211"}, {"456 356", "543311"}, {"456 356 256", "644311"}}},
      {"26 34 35 36 45 46 56", {{"", "432221"}, {"456", "543221"}, {"456 356", "875321"}, {"456 356 346", "542221"}}},
      {"16 26 35 36 45 46 56", {{"", "443321"}, {"456", "554321"}, {"456 356", "775421"}}},
      {"16 26 34 35 36 45 46 56", {{"", "332221"}, {"456", "443221"}, {"456 356", "553321"}, {"456 356 346", "774331"}}},
      {"16 25 26 35 36 45 46 56", {{"", "433321"}, {"456", "766421"}, {"456 356", "765521"}, {"456 356 256", "755521"}}},
      {"25 26 34 35 36 45 46 56", {{"", "965542"}, {"456", "865322"}, {"456 356", "432211"}}},
      {"15 16 25 26 35 36 45 46 56",
       {{"", "222211"}, {"456", "333211"}, {"456 356", "443311"}, {"456 356 256", "766411"}, {"456 356 256 156", "555511"}}},
      {"24 25 26 34 35 36 45 46 56", {{"", "533222"}, {"456", "322111"}}},
      {"23 24 25 26 34 35 36 45 46 56", {{"", "211111"}}}};
  int matched = 0, total = 0;
  for (const auto& [pairs, row] : table) {
    for (const auto& [triples, example] : row) {
      ++total;
      const auto lookup = cli::run({"locate", "--m", example.substr(0, 1) + "," + example.substr(1, 1) + "," +
                                                         example.substr(2, 1) + "," + example.substr(3, 1) + "," +
                                                         example.substr(4, 1) + "," + example.substr(5, 1),
                                    "--json"});
      const auto c = Json::parse(lookup.output)["payload"]["chamber"];
      if (!c.is_null() && c["stable_pairs"] == labels(pairs) && c["stable_triples"] == labels(triples)) ++matched;
    }
  }
  const bool ok = p["count"] == 38 && p["stabilized"] == true && matched == total;
  return {ok, std::to_string(p["count"].get<int>()) + " chambers, stabilized=" + (p["stabilized"] == true ? "true" : "false") +
                  ", table examples " + std::to_string(matched) + "/" + std::to_string(total)};
}

Outcome criterion3() {
  const auto q = classify_quotient_n6(Polarization({2, 2, 2, 1, 1, 1}));
  const auto* r = std::get_if<QuotientReport>(&q);
  if (!r) return {false, "no quotient report"};
  const bool ok = r->curves.size() == 9 && r->triple_points.size() == 6 && r->smooth_points.size() == 1;
  return {ok, std::to_string(r->curves.size()) + " curves, " + std::to_string(r->triple_points.size()) + " triple points, " +
                  std::to_string(r->smooth_points.size()) + " smooth point"};
}

Outcome criterion4() {
  auto binom = [](std::int64_t n, std::int64_t k) -> std::int64_t {
    if (n < k) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  bool ok = tableau_count(1) == 6;
  for (std::int64_t k = 0; k <= 10; ++k) {
    const auto c = tableau_count(k);
    ok = ok && c == hilbert_closed_form(k) && c == binom(k + 5, 5) - binom(k + 2, 5) &&
         c == oracle::alpha_beta_count(static_cast<int>(k));
  }
  return {ok, "k=0..10 tableau = closed form = C(k+5,5)-C(k+2,5); k=1 gives " + std::to_string(tableau_count(1))};
}

Outcome criterion5() {
  Sampler rng(2718);
  int zero = 0;
  for (int t = 0; t < 100; ++t) {
    const auto r = verify_relations(rng.configuration(6));
    if (r.residual_u == 0 && r.residual_f3 == 0) ++zero;
  }
  return {zero == 100, std::to_string(zero) + "/100 configurations with both residuals exactly 0"};
}

Outcome criterion6() {
  using Set = std::set<IntVector>;
  auto model = [](SliceKind k) { return binomial_relations(torus_invariant_basis(local_model_weights(k))); };
  auto degrees = [](const BinomialRelation& r) {
    std::int64_t a = 0, b = 0;
    for (auto x : r.lhs) a += x;
    for (auto x : r.rhs) b += x;
    return std::pair<std::int64_t, std::int64_t>(std::min(a, b), std::max(a, b));
  };
  const auto quad = model(SliceKind::PairPlusFourLine);
  const auto match = model(SliceKind::TriplePairMatching);
  const auto triple = model(SliceKind::TriplePlusLine);
  const bool quad_ok = quad.generators.size() == 5 && quad.relations.size() == 1 &&
                       degrees(quad.relations[0]) == std::pair<std::int64_t, std::int64_t>{2, 2};
  const bool match_ok = match.generators.size() == 5 && match.relations.size() == 1 &&
                        degrees(match.relations[0]) == std::pair<std::int64_t, std::int64_t>{2, 3};
  const bool triple_ok = triple.generators.size() == 4 && triple.relations.empty() && triple.smooth;
  const IntMatrix w{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, -1}};
  const auto rays = dual_cone_rays(w);
  const Set n{{0, 0, 1, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 0}};
  const bool rays_ok = Set(rays.begin(), rays.end()) == n && rays.size() == 6;
  const auto u = drop_coordinate(polytope_section(rays, AffineHyperplane{{1, 1, 1, 1}, 2}), 3);
  const std::set<RationalVector> want{{0, 0, 1}, {2, 0, 0}, {0, 0, 2}, {0, 1, 0}, {1, 0, 0}, {0, 2, 0}};
  const bool poly_ok = std::set<RationalVector>(u.begin(), u.end()) == want && u.size() == 6;
  const bool ok = quad_ok && match_ok && triple_ok && rays_ok && poly_ok;
  std::string d = std::string("T1T4=T2T3 ") + (quad_ok ? "ok" : "bad") + ", T1T2T3=T4T5 " + (match_ok ? "ok" : "bad") +
                  ", free rank 4 " + (triple_ok ? "ok" : "bad") + ", rays n1..n6 " + (rays_ok ? "ok" : "bad") +
                  ", vertices u1..u6 " + (poly_ok ? "ok" : "bad");
  return {ok, d};
}

Outcome criterion7() {
  const auto rep = wall_crossing_report(Polarization({2, 2, 1, 1, 1, 1}), Polarization({2, 2, 2, 1, 1, 1}));
  bool c14 = false, c36 = false, o = false, o456 = false;
  bool ok = true;
  for (const auto& f : rep.fibers) {
    const auto name = f.stratum.name();
    if (f.stratum.kind == StratumKind::Curve) ok = ok && f.dimension == 1 && f.type == FiberType::P1;
    if (name == "C_{14}") c14 = f.side == SurvivingSide::Collinearity;
    if (name == "C_{36}") c36 = f.side == SurvivingSide::Coincidence;
    if (name == "O_{14,25,36}") o = f.type == FiberType::P1UnionP1CommonPoint && f.surviving_families == std::vector<int>{5, 6};
    if (name == "O_{456}") o456 = f.dimension == 3 && f.type == FiberType::P3;
  }
  ok = ok && c14 && c36 && o && o456;
  return {ok, std::string("curves P1 dim 1 (C_14 collinear side, C_36 coincident side) ") + (c14 && c36 ? "ok" : "bad") +
                  ", O_{14,25,36} families {5,6} P1uP1 " + (o ? "ok" : "bad") + ", O_{456} dim 3 P3 " + (o456 ? "ok" : "bad")};
}

Outcome criterion8() {
  int cases = 0;
  bool ok = fiber_dimension(6, 3, false, 1) == 3 && fiber_dimension(6, 2, true, 1) == 1 && fiber_dimension(6, 2, false, 1) == 1;
  for (int n : {5, 6}) {
    for (int j = 2; j <= n - 3; ++j) {
      const int jp = n - j;
      ok = ok && fiber_dimension(n, j, true, 1) == n - j - 3 && fiber_dimension(n, j, false, 1) == 2 * (n - jp - 1) - 1 &&
           fiber_dimension(n, j, true, -1) == 2 * (n - jp - 1) - 1 && fiber_dimension(n, j, false, -1) == n - j - 3 &&
           fiber_dimension(n, j, true, -1) == fiber_dimension(n, j, false, 1);
      cases += 4;
    }
  }
  return {ok, std::to_string(cases) + " (direction, membership, |J|) cases for n=5,6 with the swap symmetry"};
}

Outcome criterion9() {
  Sampler rng(314);
  bool duality = true;
  for (int t = 0; t < 1000; ++t) {
    const int n = static_cast<int>(rng.integer(3, 8));
    const auto m = rng.polarization(n, 30);
    for (std::uint32_t bits = 1; bits + 1 < (1U << n); ++bits)
      duality = duality && gamma_point(m, IndexSet(bits)) == -gamma_line(m, IndexSet(bits).complement(n));
  }
  int agree = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = static_cast<int>(rng.integer(3, 6));
    const auto cfg = (t % 3 == 0) ? rng.configuration(n) : rng.degenerate_configuration(n);
    const auto m = rng.polarization(n, 5);
    if (classify_configuration(cfg, m).status == oracle::brute_force_stability(cfg, m)) ++agree;
  }
  int invariant = 0;
  const auto cfg = rng.configuration(6);
  const auto base = evaluate_generators(cfg);
  for (int t = 0; t < 50; ++t) {
    const auto g = rng.unimodular();
    if (determinant(g) == 1 && evaluate_generators(gitq::apply(g, cfg)).t == base.t) ++invariant;
  }
  const bool ok = duality && agree == 500 && invariant == 50;
  return {ok, std::string("duality on 1000 polarizations ") + (duality ? "ok" : "bad") + ", oracle agreement " +
                  std::to_string(agree) + "/500, SL-invariance " + std::to_string(invariant) + "/50"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"n=5 chambers", criterion1},   {"n=6 chambers", criterion2},         {"(222111) strata", criterion3},
      {"Hilbert data", criterion4},   {"bracket identities", criterion5},   {"toric models", criterion6},
      {"wall crossing", criterion7},  {"fiber dimensions", criterion8},     {"property suites", criterion9}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("[%s] criterion %zu: %s: %s (%.1f ms)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), ms);
  }
  return failed == 0 ? 0 : 1;
}
