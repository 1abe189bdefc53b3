#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gitq/cli.hpp"
#include "gitq/serialize.hpp"

namespace py = pybind11;
using namespace gitq;

namespace {

Polarization polarization(const std::vector<std::string>& weights) {
  RationalVector q;
  for (const auto& w : weights) q.push_back(parse_rational(w));
  return Polarization::from_rationals(q);
}

IndexSet one_based(const std::vector<int>& indices, int n) { return IndexSet::from_one_based(indices, n); }

PointConfiguration points(const std::vector<std::vector<std::string>>& rows) {
  PointConfiguration cfg;
  for (const auto& r : rows) {
    if (r.size() != 3) throw InputError("each point needs three coordinates");
    cfg.emplace_back(parse_rational(r[0]), parse_rational(r[1]), parse_rational(r[2]));
  }
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact GIT stability for weighted points in the projective plane (JSON-returning core)";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  m.attr("SCHEMA") = std::string(kSchema);

  m.def("gamma_point", [](const std::vector<std::string>& w, const std::vector<int>& k) {
    const auto p = polarization(w);
    return gamma_point(p, one_based(k, p.size()));
  });
  m.def("gamma_line", [](const std::vector<std::string>& w, const std::vector<int>& j) {
    const auto p = polarization(w);
    return gamma_line(p, one_based(j, p.size()));
  });
  m.def("generic_stability", [](const std::vector<std::string>& w) { return to_json(generic_stability(polarization(w))).dump(); });
  m.def("classify_points", [](const std::vector<std::string>& w, const std::vector<std::vector<std::string>>& rows) {
    return to_json(classify_configuration(points(rows), polarization(w))).dump();
  });
  m.def("locate", [](const std::vector<std::string>& w) { return to_json(stable_sets_of(polarization(w))).dump(); });
  m.def(
      "chambers",
      [](int n, std::int64_t bound, unsigned threads) {
        ChamberAtlas atlas;
        {
          py::gil_scoped_release release;
          atlas = enumerate_chambers(n, bound, threads);
        }
        return to_json(atlas).dump();
      },
      py::arg("n"), py::arg("bound") = 40, py::arg("threads") = 0);
  m.def("classify_quotient", [](const std::vector<std::string>& w) { return to_json(classify_quotient_n6(polarization(w))).dump(); });
  m.def("wall_crossing", [](const std::vector<std::string>& m_hat, const std::vector<std::string>& w) {
    return to_json(wall_crossing_report(polarization(m_hat), polarization(w))).dump();
  });
  m.def(
      "toric_model",
      [](const IntMatrix& weights, const std::vector<int>& inverted, int bound) {
        TorusAction action{weights, {}};
        if (!inverted.empty()) action.inverted = one_based(inverted, action.dim());
        return to_json(attach_cone_data(binomial_relations(torus_invariant_basis(action, bound)))).dump();
      },
      py::arg("weights"), py::arg("inverted") = std::vector<int>{}, py::arg("bound") = kDefaultDegreeBound);
  m.def("dual_cone_rays", &dual_cone_rays);
  m.def("hilbert_table", [](std::int64_t kmax) { return to_json(hilbert_table(kmax)).dump(); });
  m.def("relation_residuals", [](const std::vector<std::vector<std::string>>& rows) {
    const auto r = verify_relations(points(rows));
    return std::make_pair(gitq::to_string(r.residual_u), gitq::to_string(r.residual_f3));
  });
  m.def("run", [](const std::vector<std::string>& args) {
    const auto r = cli::run(args);
    return py::make_tuple(r.exit_code, r.output, r.diagnostics);
  });
}
