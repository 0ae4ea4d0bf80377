// mslab: command-line workbench for model-space computations.
//
//   mslab run --scenario <name> [--config <json>] [--out <dir>]
//   mslab eval|ac|clark|geometry|localize|moments|transfer|orthopoly ...
//
// Arguments that take a JSON object accept either a file path or an inline
// JSON string.  MSLAB_THREADS caps worker threads.  Exit codes: 0 success,
// 2 configuration rejection, 3 numerical failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mslab/ac.hpp"
#include "mslab/clark.hpp"
#include "mslab/geometry.hpp"
#include "mslab/inner.hpp"
#include "mslab/kernel.hpp"
#include "mslab/localize.hpp"
#include "mslab/report.hpp"
#include "mslab/transfer.hpp"
#include "mslab/workbench.hpp"

namespace {

using mslab::cplx;

// file path or inline JSON text
std::string read_json_arg(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::exists(arg, ec) && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream f(arg, std::ios::binary);
    if (!f) throw mslab::ConfigError("cannot read " + arg);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  return arg;
}

cplx parse_cplx(const std::string& s) {
  double re = 0.0, im = 0.0;
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos) {
      re = std::stod(s);
    } else {
      re = std::stod(s.substr(0, comma));
      im = std::stod(s.substr(comma + 1));
    }
  } catch (const std::exception&) {
    throw mslab::ConfigError("cannot parse complex number from '" + s + "'");
  }
  return {re, im};
}

nlohmann::json cplx_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json report_json(const mslab::ConvergenceReport& rep) {
  nlohmann::json out{{"verdict", mslab::verdict_name(rep.verdict)},
                     {"partial_sum", rep.partial_sum},
                     {"terms_used", static_cast<long long>(rep.terms_used)},
                     {"form", rep.form},
                     {"sum_certified", rep.sum_certified},
                     {"witness", rep.witness}};
  if (rep.tail_bound) out["tail_upper"] = *rep.tail_bound;
  return out;
}

void print_json(const nlohmann::json& j) { std::cout << mslab::render_json(j) << "\n"; }

mslab::BoundaryPoint boundary_arg(const std::string& point, bool at_infinity) {
  if (at_infinity != point.empty())
    throw mslab::ConfigError("give exactly one of --point and --infinity");
  if (at_infinity) return mslab::BoundaryPoint::infinity();
  return mslab::BoundaryPoint::at(parse_cplx(point));
}

mslab::LatticeMeasureSpec parse_lattice(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw mslab::ConfigError("cannot parse lattice parameter '" + item + "'");
    }
  }
  if (v.size() != 5)
    throw mslab::ConfigError("--lattice needs rho,m,s,c,truncation");
  mslab::LatticeMeasureSpec spec;
  spec.rho = v[0];
  spec.m = v[1];
  spec.s = v[2];
  spec.c = v[3];
  if (!(v[4] >= 1.0)) throw mslab::ConfigError("lattice truncation must be >= 1");
  spec.truncation = static_cast<std::size_t>(v[4]);
  return spec;
}

std::vector<cplx> parse_cplx_list(const std::vector<std::string>& items) {
  std::vector<cplx> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(parse_cplx(s));
  return out;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"model-space workbench: inner functions, reproducing kernels, "
               "Clark measures, kernel-system geometry, localization probes"};
  app.require_subcommand(1);

  // ------------------------------------------------------------------ run
  auto* run = app.add_subcommand("run", "run a named scenario and emit reports");
  std::string run_scenario_name, run_config, run_out;
  run->add_option("--scenario", run_scenario_name,
                  "section3_example | section5_umnr | remark3 | theorem17_umnr | custom");
  run->add_option("--config", run_config, "scenario config (file or inline JSON)");
  run->add_option("--out", run_out, "output directory for the report bundle");

  // ----------------------------------------------------------------- eval
  auto* eval = app.add_subcommand("eval", "evaluate theta at points");
  std::string eval_spec;
  std::vector<std::string> eval_z;
  eval->add_option("--spec", eval_spec, "inner function spec (file or inline JSON)")
      ->required();
  eval->add_option("--z", eval_z, "point re,im (repeatable)")->required();

  // ------------------------------------------------------------------- ac
  auto* ac = app.add_subcommand("ac", "boundary regularity sum of a given order");
  std::string ac_spec, ac_point;
  bool ac_inf = false;
  int ac_order = 0;
  ac->add_option("--spec", ac_spec, "inner function spec")->required();
  ac->add_option("--order", ac_order, "sum order n >= 0");
  ac->add_option("--point", ac_point, "boundary point re,im");
  ac->add_flag("--infinity", ac_inf, "test at infinity (half-plane)");

  // ---------------------------------------------------------------- clark
  auto* clark = app.add_subcommand("clark", "Clark measure of a finite Blaschke spec");
  std::string clark_spec, clark_alpha = "1,0";
  clark->add_option("--spec", clark_spec, "inner function spec")->required();
  clark->add_option("--alpha", clark_alpha, "unimodular parameter re,im");

  // ------------------------------------------------------------- geometry
  auto* geo = app.add_subcommand("geometry", "kernel-system Gram diagnostics");
  std::string geo_spec;
  std::vector<std::string> geo_points;
  geo->add_option("--spec", geo_spec, "inner function spec")->required();
  geo->add_option("--point", geo_points, "interior point re,im (repeatable)")
      ->required();

  // ------------------------------------------------------------- localize
  auto* loc = app.add_subcommand("localize", "zero count of a kernel combination");
  std::string loc_spec, loc_region;
  std::vector<std::string> loc_points, loc_coeffs;
  loc->add_option("--spec", loc_spec, "finite Blaschke spec")->required();
  loc->add_option("--region", loc_region, "region (file or inline JSON)")->required();
  loc->add_option("--point", loc_points, "kernel point re,im (repeatable)")
      ->required();
  loc->add_option("--coeff", loc_coeffs, "coefficient re,im (one per point)")
      ->required();

  // -------------------------------------------------------------- moments
  auto* mom = app.add_subcommand("moments", "exponential moment test");
  std::string mom_measure, mom_lattice, mom_point;
  bool mom_inf = false;
  double mom_eps = 1.0;
  mom->add_option("--measure", mom_measure, "Clark measure (file or inline JSON)");
  mom->add_option("--lattice", mom_lattice, "lattice spec rho,m,s,c,truncation");
  mom->add_option("--eps", mom_eps, "moment parameter > 0")->required();
  mom->add_option("--point", mom_point, "boundary point re,im");
  mom->add_flag("--infinity", mom_inf, "test at infinity");

  // ------------------------------------------------------------- transfer
  auto* tra = app.add_subcommand("transfer", "move objects between disc and half-plane");
  std::string tra_spec, tra_measure, tra_anchor = "1,0";
  tra->add_option("--spec", tra_spec, "inner function spec to transfer");
  tra->add_option("--measure", tra_measure, "Clark measure to transfer");
  tra->add_option("--anchor", tra_anchor, "boundary anchor re,im");

  // ------------------------------------------------------------ orthopoly
  auto* ort = app.add_subcommand("orthopoly",
                                 "orthonormal-polynomial divergence trace (CSV)");
  std::string ort_measure, ort_lattice, ort_z0 = "0,1";
  std::size_t ort_k = 10;
  ort->add_option("--measure", ort_measure, "Clark measure (file or inline JSON)");
  ort->add_option("--lattice", ort_lattice, "lattice spec rho,m,s,c,truncation");
  ort->add_option("--z0", ort_z0, "non-real probe point re,im");
  ort->add_option("--K", ort_k, "highest polynomial degree");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    mslab::ScenarioConfig cfg;
    if (!run_config.empty()) {
      cfg = mslab::scenario_config_from_json(read_json_arg(run_config));
    } else if (run_scenario_name.empty()) {
      throw mslab::ConfigError("run needs --scenario or --config");
    }
    if (!run_scenario_name.empty()) cfg.scenario = run_scenario_name;
    if (!run_out.empty()) cfg.out_dir = run_out;
    std::vector<std::string> files = mslab::run_and_emit(cfg);
    print_json(nlohmann::json{{"written", files}});
    return 0;
  }

  if (eval->parsed()) {
    mslab::InnerFunctionSpec spec = mslab::spec_from_json(read_json_arg(eval_spec));
    nlohmann::json values = nlohmann::json::array();
    for (const auto& zs : eval_z) {
      cplx z = parse_cplx(zs);
      values.push_back(
          nlohmann::json{{"z", cplx_json(z)},
                         {"theta", cplx_json(mslab::eval_inner_any(spec, z))}});
    }
    print_json(nlohmann::json{{"values", values}});
    return 0;
  }

  if (ac->parsed()) {
    mslab::InnerFunctionSpec spec = mslab::spec_from_json(read_json_arg(ac_spec));
    mslab::ConvergenceReport rep =
        mslab::ac_test(spec, boundary_arg(ac_point, ac_inf), ac_order);
    print_json(report_json(rep));
    return 0;
  }

  if (clark->parsed()) {
    mslab::InnerFunctionSpec spec = mslab::spec_from_json(read_json_arg(clark_spec));
    mslab::ClarkMeasure mu = mslab::clark_atoms(spec, parse_cplx(clark_alpha));
    nlohmann::json out = nlohmann::json::parse(mslab::measure_to_json(mu));
    out["mass_identity"] = mslab::clark_mass_identity(spec, parse_cplx(clark_alpha));
    print_json(out);
    return 0;
  }

  if (geo->parsed()) {
    mslab::InnerFunctionSpec spec = mslab::spec_from_json(read_json_arg(geo_spec));
    mslab::KernelSystem sys = mslab::build_system(spec, parse_cplx_list(geo_points));
    mslab::GeometryReport rep = mslab::geometry_report(sys);
    print_json(nlohmann::json{{"riesz_lower", rep.riesz_lower},
                              {"riesz_upper", rep.riesz_upper},
                              {"minimal", rep.minimal},
                              {"biorth_norms", rep.biorth_norms}});
    return 0;
  }

  if (loc->parsed()) {
    mslab::InnerFunctionSpec spec = mslab::spec_from_json(read_json_arg(loc_spec));
    mslab::Region region = mslab::region_from_json(read_json_arg(loc_region));
    mslab::KthElement f = mslab::kth_element_from_kernels(
        spec, parse_cplx_list(loc_points), parse_cplx_list(loc_coeffs));
    int count = mslab::count_zeros_in_region(f, region);
    print_json(nlohmann::json{{"zero_count", count}});
    return 0;
  }

  if (mom->parsed()) {
    if (mom_measure.empty() == mom_lattice.empty())
      throw mslab::ConfigError("give exactly one of --measure and --lattice");
    mslab::ConvergenceReport rep;
    if (!mom_lattice.empty()) {
      rep = mslab::exp_moment_test(parse_lattice(mom_lattice), mom_eps);
    } else {
      mslab::ClarkMeasure mu = mslab::measure_from_json(read_json_arg(mom_measure));
      rep = mslab::exp_moment_test(mu, boundary_arg(mom_point, mom_inf), mom_eps);
    }
    print_json(report_json(rep));
    return 0;
  }

  if (tra->parsed()) {
    if (tra_spec.empty() == tra_measure.empty())
      throw mslab::ConfigError("give exactly one of --spec and --measure");
    cplx anchor = parse_cplx(tra_anchor);
    if (!tra_spec.empty()) {
      mslab::InnerFunctionSpec spec = mslab::spec_from_json(read_json_arg(tra_spec));
      std::cout << mslab::spec_to_json(mslab::transfer_inner(spec, anchor)) << "\n";
    } else {
      mslab::ClarkMeasure mu = mslab::measure_from_json(read_json_arg(tra_measure));
      std::cout << mslab::measure_to_json(mslab::transfer_clark(mu, anchor)) << "\n";
    }
    return 0;
  }

  if (ort->parsed()) {
    if (ort_measure.empty() == ort_lattice.empty())
      throw mslab::ConfigError("give exactly one of --measure and --lattice");
    mslab::OrthopolyTrace trace;
    cplx z0 = parse_cplx(ort_z0);
    if (!ort_lattice.empty()) {
      trace = mslab::orthopoly_divergence_diagnostic(parse_lattice(ort_lattice), z0,
                                                     ort_k);
    } else {
      mslab::ClarkMeasure mu = mslab::measure_from_json(read_json_arg(ort_measure));
      trace = mslab::orthopoly_divergence_diagnostic(mslab::expanded_atoms(mu), z0,
                                                     ort_k);
    }
    std::cout << mslab::render_trace_csv({"partial_sums", trace.partial_sums});
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const mslab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const mslab::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
