#include "gitq/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "gitq/sampling.hpp"

namespace gitq::cli {
namespace {

// Thrown for bad flags or flag combinations that CLI11 cannot detect itself.
struct UsageError : InputError {
  using InputError::InputError;
};

IntMatrix parse_int_matrix(std::string_view text) {
  IntMatrix rows;
  std::string row_text;
  std::istringstream in{std::string(text)};
  while (std::getline(in, row_text, ';')) {
    IntVector row;
    std::istringstream cells(row_text);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoll(cell, &used));
        while (used < cell.size() && cell[used] == ' ') ++used;
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::logic_error&) {
        throw InputError("malformed integer '" + cell + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("empty matrix");
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw InputError("matrix rows have different lengths");
  }
  return rows;
}

SliceKind parse_stratum(const std::string& s) {
  if (s == "pair") return SliceKind::PairPlusFourLine;
  if (s == "matching") return SliceKind::TriplePairMatching;
  if (s == "triple") return SliceKind::TriplePlusLine;
  throw UsageError("unknown stratum '" + s + "' (expected pair, matching or triple)");
}

void render_text(const Json& value, const std::string& prefix, std::ostringstream& out) {
  if (value.is_object()) {
    for (const auto& [key, v] : value.items()) render_text(v, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  out << prefix << ": " << value.dump() << "\n";
}

struct Options {
  bool json = false;
  std::string m;
  std::string points;
  int n = 0;
  std::int64_t bound = 40;
  std::string atlas;
  unsigned threads = 0;
  int index = 0;
  int dir = 0;
  std::string stratum;
  std::string weights;
  std::string inverted;
  int degree_bound = kDefaultDegreeBound;
  int relation_bound = 2 * kDefaultDegreeBound;
  std::int64_t kmax = 10;
  int trials = 100;
  std::uint64_t seed = 1;
  std::string generators;
  std::string section;
  int drop = 0;
};

CommandResult stability_cmd(const Options& o) {
  const auto m = parse_polarization(o.m);
  std::ifstream in(o.points);
  if (!in) throw UsageError("cannot open points file '" + o.points + "'");
  const auto cfg = parse_points(in);
  const auto v = classify_configuration(cfg, m);
  return {Status::Ok, Json{{"m", to_json(m)}, {"verdict", to_json(v)}}, {}, kExitOk, {}};
}

CommandResult generic_cmd(const Options& o) {
  const auto m = parse_polarization(o.m);
  const auto g = generic_stability(m);
  return {g.semistable_locus_empty ? Status::Empty : Status::Ok, Json{{"m", to_json(m)}, {"generic", to_json(g)}}, {},
          kExitOk, {}};
}

CommandResult chambers_cmd(const Options& o) {
  const auto atlas = enumerate_chambers(o.n, o.bound, o.threads);
  CommandResult r{Status::Ok, to_json(atlas), {}, kExitOk, {}};
  if (!atlas.stabilized) r.diagnostics.push_back("chamber count changed within the last 9 values of the bound");
  if (!o.atlas.empty()) {
    std::ofstream out(o.atlas);
    if (!out) throw UsageError("cannot write atlas file '" + o.atlas + "'");
    out << atlas_document(atlas).dump(2) << "\n";
  }
  return r;
}

CommandResult locate_cmd(const Options& o) {
  const auto lookup = stable_sets_of(parse_polarization(o.m));
  const bool wall = std::holds_alternative<WallReport>(lookup.result);
  return {wall ? Status::Wall : Status::Ok, to_json(lookup), {}, kExitOk, {}};
}

CommandResult classify_cmd(const Options& o) {
  const auto q = classify_quotient_n6(parse_polarization(o.m));
  const bool empty = std::holds_alternative<EmptySemistableReport>(q);
  return {empty ? Status::Empty : Status::Ok, to_json(q), {}, kExitOk, {}};
}

CommandResult wallcross_cmd(const Options& o) {
  const auto m = parse_polarization(o.m);
  if (o.dir != 1 && o.dir != -1) throw UsageError("--dir must be 1 or -1");
  const int i = index_from_io(o.index, m.size());
  const auto m_hat = m.shifted(i, o.dir);
  const auto report = wall_crossing_report(m_hat, m);
  CommandResult r{Status::Ok, to_json(report), {}, kExitOk, {}};
  if (report.fibers.empty()) {
    r.status = Status::Empty;
    r.diagnostics.push_back("m has no strictly semistable strata");
  }
  return r;
}

CommandResult toric_cmd(const Options& o) {
  if (o.stratum.empty() == o.weights.empty()) throw UsageError("give exactly one of --stratum or --weights");
  TorusAction action = o.weights.empty() ? local_model_weights(parse_stratum(o.stratum)) : TorusAction{parse_int_matrix(o.weights), {}};
  if (!o.inverted.empty()) action.inverted = parse_index_list(o.inverted, action.dim());
  auto model = binomial_relations(torus_invariant_basis(action, o.degree_bound), o.relation_bound);
  CommandResult r{Status::Ok, {}, model.warnings, kExitOk, {}};
  if (model.saturated == false) throw InvariantError("invariant generators are not saturated; raise --bound");
  try {
    model = attach_cone_data(std::move(model));
  } catch (const ConeShapeError& e) {
    r.diagnostics.push_back(std::string("cone data omitted: ") + e.what());
  }
  r.payload = to_json(model);
  return r;
}

CommandResult cone_cmd(const Options& o) {
  const auto gens = parse_int_matrix(o.generators);
  const auto rays = dual_cone_rays(gens);
  Json payload{{"generators", gens}, {"rays", rays}, {"smoothness", gitq::to_string(cone_smoothness(rays))}};
  if (!o.section.empty()) {
    const auto eq = o.section.find('=');
    if (eq == std::string::npos) throw UsageError("--section expects 'a1,...,ad=c'");
    AffineHyperplane h;
    const auto normal = parse_int_matrix(o.section.substr(0, eq));
    if (normal.size() != 1) throw UsageError("--section expects a single normal vector");
    for (const auto part : normal.front()) h.normal.emplace_back(static_cast<long>(part));
    h.offset = parse_rational(o.section.substr(eq + 1));
    auto vertices = polytope_section(rays, h);
    if (o.drop != 0) vertices = drop_coordinate(vertices, index_from_io(o.drop, static_cast<int>(h.normal.size())));
    Json v = Json::array();
    for (const auto& p : vertices) {
      Json row = Json::array();
      for (const auto& x : p) row.push_back(gitq::to_string(x));
      v.push_back(row);
    }
    payload["vertices"] = v;
  }
  return {Status::Ok, payload, {}, kExitOk, {}};
}

CommandResult hilbert_cmd(const Options& o) {
  const auto rows = hilbert_table(o.kmax);
  bool match = true;
  bool printed_match = true;
  for (const auto& r : rows) {
    match = match && r.tableau == r.closed_form && r.tableau == r.series;
    printed_match = printed_match && r.printed_rule == r.series;
  }
  CommandResult r{Status::Ok, Json{{"rows", to_json(rows)}, {"match", match}, {"printed_rule_match", printed_match}}, {}, kExitOk, {}};
  if (!printed_match) {
    r.diagnostics.push_back("the printed (x,y,z,w) inequalities alone overcount; counts use the completed system with w+z-x <= 3k");
  }
  if (!match) throw InvariantError("tableau count disagrees with the closed form or the series");
  return r;
}

CommandResult relations_cmd(const Options& o) {
  if (o.trials < 0) throw UsageError("--trials must be non-negative");
  Sampler sampler(o.seed);
  Json nonzero = Json::array();
  for (int trial = 0; trial < o.trials; ++trial) {
    const auto res = verify_relations(sampler.configuration(6));
    if (res.residual_u != 0 || res.residual_f3 != 0) {
      nonzero.push_back(Json{{"trial", trial}, {"residual_u", gitq::to_string(res.residual_u)}, {"residual_f3", gitq::to_string(res.residual_f3)}});
    }
  }
  const bool all_zero = nonzero.empty();
  CommandResult r{Status::Ok,
                  Json{{"trials", o.trials}, {"seed", std::to_string(o.seed)}, {"all_zero", all_zero}, {"nonzero", nonzero}},
                  {},
                  kExitOk,
                  {}};
  if (!all_zero) {
    r.status = Status::Error;
    r.exit_code = kExitInvariant;
    r.diagnostics.push_back("bracket relation residuals are not all zero");
  }
  return r;
}

std::string render(const std::string& command, const CommandResult& r, bool json) {
  if (json) {
    Json doc{{"schema", kSchema}, {"command", command}, {"status", to_string(r.status)}, {"payload", r.payload}, {"diagnostics", r.diagnostics}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "status: " << to_string(r.status) << "\n";
  render_text(r.payload, "", out);
  return out.str();
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Wall: return "wall";
    case Status::Empty: return "empty";
    case Status::Error: return "error";
  }
  return "?";
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact GIT stability of weighted point configurations in P^2", "gitq"};
  app.require_subcommand(1);
  Options o;

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit a versioned JSON document"); };

  auto* stability = app.add_subcommand("stability", "Stability of a configuration read from a file");
  stability->add_option("--m", o.m, "Polarization, e.g. 2,2,2,1,1,1")->required();
  stability->add_option("--points", o.points, "One point per line: three rationals a/b")->required();
  json_flag(stability);

  auto* generic = app.add_subcommand("generic", "Stability of points in general position");
  generic->add_option("--m", o.m)->required();
  json_flag(generic);

  auto* chambers = app.add_subcommand("chambers", "Enumerate stability chambers");
  chambers->add_option("--n", o.n)->required();
  chambers->add_option("--bound", o.bound, "Largest |m| scanned");
  chambers->add_option("--atlas", o.atlas, "Write the atlas JSON here");
  chambers->add_option("--threads", o.threads, "Worker threads (capped by GITQ_THREADS)");
  json_flag(chambers);

  auto* locate = app.add_subcommand("locate", "Chamber or walls of one polarization");
  locate->add_option("--m", o.m)->required();
  json_flag(locate);

  auto* classify = app.add_subcommand("classify", "Classify the n=6 quotient");
  classify->add_option("--m", o.m)->required();
  json_flag(classify);

  auto* wallcross = app.add_subcommand("wallcross", "Wall crossing from m_hat = m + dir*e_index to m");
  wallcross->add_option("--m", o.m)->required();
  wallcross->add_option("--index", o.index, "1-based coordinate")->required();
  wallcross->add_option("--dir", o.dir, "1 or -1")->required();
  json_flag(wallcross);

  auto* toric = app.add_subcommand("toric", "Invariant ring of a torus action");
  toric->add_option("--stratum", o.stratum, "pair, matching or triple");
  toric->add_option("--weights", o.weights, "Rows separated by ';', entries by ','");
  toric->add_option("--inverted", o.inverted, "1-based coordinates allowed negative exponents");
  toric->add_option("--bound", o.degree_bound, "Degree bound for generators");
  toric->add_option("--relation-bound", o.relation_bound, "Degree bound for relations");
  json_flag(toric);

  auto* cone = app.add_subcommand("cone", "Dual cone rays and a polytope section");
  cone->add_option("--generators", o.generators, "Rows separated by ';'")->required();
  cone->add_option("--section", o.section, "Hyperplane 'a1,...,ad=c'");
  cone->add_option("--drop", o.drop, "1-based coordinate removed from the vertices");
  json_flag(cone);

  auto* hilbert = app.add_subcommand("hilbert", "Tableau counts against the Hilbert series");
  hilbert->add_option("--kmax", o.kmax);
  json_flag(hilbert);

  auto* relations = app.add_subcommand("relations", "Bracket identities on random configurations");
  relations->add_option("--trials", o.trials);
  relations->add_option("--seed", o.seed);
  json_flag(relations);

  std::vector<std::string> argv_store{"gitq"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  std::string command = args.empty() ? "" : args.front();
  CommandResult r;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    r.output = subs.empty() ? app.help() : subs.front()->help();
    return r;
  } catch (const CLI::ParseError& e) {
    r.status = Status::Error;
    r.exit_code = kExitUsage;
    r.diagnostics.push_back(e.what());
    r.payload = Json::object();
    r.output = render(command, r, o.json);
    return r;
  }
  try {
    if (stability->parsed()) r = stability_cmd(o);
    else if (generic->parsed()) r = generic_cmd(o);
    else if (chambers->parsed()) r = chambers_cmd(o);
    else if (locate->parsed()) r = locate_cmd(o);
    else if (classify->parsed()) r = classify_cmd(o);
    else if (wallcross->parsed()) r = wallcross_cmd(o);
    else if (toric->parsed()) r = toric_cmd(o);
    else if (cone->parsed()) r = cone_cmd(o);
    else if (hilbert->parsed()) r = hilbert_cmd(o);
    else if (relations->parsed()) r = relations_cmd(o);
  } catch (const InputError& e) {
    r = {Status::Error, Json::object(), {e.what()}, kExitUsage, {}};
  } catch (const InvariantError& e) {
    r = {Status::Error, Json::object(), {e.what()}, kExitInvariant, {}};
  } catch (const std::exception& e) {
    r = {Status::Error, Json::object(), {std::string("internal error: ") + e.what()}, kExitInvariant, {}};
  }
  r.output = render(command, r, o.json);
  return r;
}

}  // namespace gitq::cli
