#pragma once
// Scenario workbench: end-to-end reconstructions of the named constructions
// (the two-sided polynomial-growth Blaschke family, the arithmetic UMNR
// family with its biorthogonal traces, the n + i n^{-3/2} boundary family,
// and the weak-limit kernel selection), emitted as deterministic report
// bundles.

#include <string>
#include <vector>

#include "json.hpp"
#include "mslab/report.hpp"

namespace mslab {

// Configuration for one scenario run.  Fields are scenario-specific; unused
// ones are ignored.  Scenario names:
//   section3_example   two-sided zeros |n|^alpha sign(n) + i e^{-|n|^{1/beta}};
//                      AC verdicts at infinity, growth-exponent fit, and the
//                      zero count of the quotient element F/E
//   section5_umnr      real-axis family x_n = spacing*n, y_n = x_n^{-6},
//                      s_n = x_n^{-2}, t_n = x_n + s_n; separation checks,
//                      boundary-kernel Gram, biorthogonal norms, comparison
//                      ratio traces, divergence trace
//   remark3            zeros n + i n^{-3/2}; order-0 vs order-1 verdicts at
//                      infinity and the t^2 |Theta'(t)| trace
//   theorem17_umnr     clustered disc zeros with a norm-level selection
//                      ||k_{lambda_n}|| = 2 ||k_zeta|| and UMNR traces
//   custom             caller-supplied spec/points/boundary point
struct ScenarioConfig {
  std::string scenario = "custom";
  double alpha = 2.0;  // section3: 1 < alpha < beta
  double beta = 3.0;
  int ac_order_max = 6;                   // section3: top AC order tested
  int truncation = 200;                   // section3: |n| <= N; remark3: N
  double spacing = 1.25;                  // section5: x_n = spacing * n
  std::vector<std::size_t> truncations;   // section5/theorem17 system sizes;
                                          // empty takes the scenario default
  std::string out_dir = ".";
  nlohmann::json custom = nlohmann::json::object();
};

// {"scenario":..., "alpha":..., "beta":..., "ac_order_max":...,
//  "truncation":..., "spacing":..., "truncations":[...], "out_dir":...,
//  "custom":{...}}; unknown keys are rejected
ScenarioConfig scenario_config_from_json(const std::string& text);

// structural checks (known name, 1 < alpha < beta, ascending truncations,
// spacing > 1, positive truncation); throws ConfigError
void validate_scenario_config(const ScenarioConfig& cfg);

// run the computation; no file I/O (pair with emit_report)
ReportBundle run_scenario(const ScenarioConfig& cfg);

// run_scenario + emit_report into cfg.out_dir; returns the files written
std::vector<std::string> run_and_emit(const ScenarioConfig& cfg);

}  // namespace mslab
