// pybind11 module over the mslab core. Structured data crosses the boundary
// as JSON text in the same schemas the CLI reads and writes; the python
// package in python/mslab decodes it into plain dicts and lists.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mslab/ac.hpp"
#include "mslab/clark.hpp"
#include "mslab/geometry.hpp"
#include "mslab/inner.hpp"
#include "mslab/kernel.hpp"
#include "mslab/report.hpp"
#include "mslab/workbench.hpp"

namespace py = pybind11;

namespace {

using namespace mslab;
using njson = nlohmann::json;

BoundaryPoint point_from(const std::optional<cplx>& p) {
  return p ? BoundaryPoint::at(*p) : BoundaryPoint::infinity();
}

njson pair(cplx z) { return njson::array({z.real(), z.imag()}); }

std::string ac_report_json(const std::string& spec_json,
                           const std::optional<cplx>& point, int order) {
  InnerFunctionSpec spec = spec_from_json(spec_json);
  ConvergenceReport rep = ac_test(spec, point_from(point), order);
  njson j;
  j["verdict"] = verdict_name(rep.verdict);
  j["partial_sum"] = rep.partial_sum;
  if (rep.tail_bound) j["tail_bound"] = *rep.tail_bound;
  j["terms_used"] = rep.terms_used;
  j["sum_certified"] = rep.sum_certified;
  j["witness"] = rep.witness;
  j["terms"] = rep.terms;
  return render_json(j);
}

std::string clark_atoms_json(const std::string& spec_json, cplx alpha) {
  return measure_to_json(clark_atoms(spec_from_json(spec_json), alpha));
}

std::string system_json(const std::string& spec_json,
                        const std::vector<cplx>& points) {
  KernelSystem sys = build_system(spec_from_json(spec_json), points);
  RieszBounds rb = riesz_bounds(sys);
  njson j;
  j["points"] = njson::array();
  for (cplx p : sys.points) j["points"].push_back(pair(p));
  j["norms"] = sys.norms;
  j["gram"] = njson::array();
  for (std::size_t n = 0; n < sys.size(); ++n) {
    njson row = njson::array();
    for (std::size_t m = 0; m < sys.size(); ++m) row.push_back(pair(sys.gram_at(n, m)));
    j["gram"].push_back(row);
  }
  j["riesz"] = {{"lower", rb.lower}, {"upper", rb.upper}};
  return render_json(j);
}

std::string scenario_json(const std::string& config_json) {
  ScenarioConfig cfg = scenario_config_from_json(config_json);
  validate_scenario_config(cfg);
  ReportBundle b = run_scenario(cfg);
  njson j;
  j["scenario"] = b.scenario;
  j["report"] = b.body;
  j["traces"] = njson::object();
  for (const auto& tr : b.traces) j["traces"][tr.name] = tr.values;
  return render_json(j);
}

std::vector<std::string> emit_scenario(const std::string& config_json) {
  ScenarioConfig cfg = scenario_config_from_json(config_json);
  validate_scenario_config(cfg);
  return run_and_emit(cfg);
}

}  // namespace

PYBIND11_MODULE(_mslab, m) {
  m.doc() = "model-space kernel toolkit (C++ core)";

  m.def(
      "eval_inner",
      [](const std::string& spec_json, cplx z) {
        return eval_inner_any(spec_from_json(spec_json), z);
      },
      py::arg("spec_json"), py::arg("z"),
      "value of the inner function at an interior or boundary point");

  m.def(
      "kernel_eval",
      [](const std::string& spec_json, cplx lam, cplx z) {
        return kernel_eval(spec_from_json(spec_json), lam, z);
      },
      py::arg("spec_json"), py::arg("lam"), py::arg("z"),
      "reproducing kernel k_lam(z)");

  m.def(
      "kernel_norm",
      [](const std::string& spec_json, cplx z) {
        return kernel_norm(spec_from_json(spec_json), z);
      },
      py::arg("spec_json"), py::arg("z"), "norm of the kernel at z");

  m.def("ac_test", &ac_report_json, py::arg("spec_json"),
        py::arg("point") = std::nullopt, py::arg("order") = 0,
        "convergence report (JSON) for the order-n boundary sum; "
        "point=None probes infinity");

  m.def("clark_atoms", &clark_atoms_json, py::arg("spec_json"),
        py::arg("alpha") = cplx(1.0, 0.0),
        "Clark measure (JSON) of a finite Blaschke product");

  m.def("build_system", &system_json, py::arg("spec_json"), py::arg("points"),
        "normalized kernel system (JSON): points, norms, Gram, Riesz bounds");

  m.def("run_scenario", &scenario_json, py::arg("config_json"),
        "run a workbench scenario; returns scenario, report body, and traces "
        "as JSON");

  m.def("run_and_emit", &emit_scenario, py::arg("config_json"),
        "run a scenario and write its report files; returns the paths");

  m.def("spec_roundtrip",
        [](const std::string& spec_json) {
          return spec_to_json(spec_from_json(spec_json));
        },
        py::arg("spec_json"), "parse + validate + re-serialize a spec");
}
