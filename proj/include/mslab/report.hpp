#pragma once
// Deterministic report emission: JSON bodies with sorted keys and fixed
// %.12e float formatting, plus CSV trace files.  Byte-identical output for
// identical inputs is part of the contract, so all formatting is pinned here
// rather than left to a serializer's defaults.

#include <string>
#include <vector>

#include "json.hpp"

namespace mslab {

// a named numeric series, emitted as <scenario>_<name>.csv
struct TraceSeries {
  std::string name;
  std::vector<double> values;
};

struct ReportBundle {
  std::string scenario;  // file stem; empty falls back to "report"
  nlohmann::json body = nlohmann::json::object();
  std::vector<TraceSeries> traces;
};

// render a JSON value with sorted object keys, "%.12e" doubles, and
// non-finite doubles as the strings "inf"/"-inf"/"nan"
std::string render_json(const nlohmann::json& v);

// "index,value\n" header plus one "%zu,%.12e" row per entry
std::string render_trace_csv(const TraceSeries& t);

// write <stem>.json (body + scenario + trace_files envelope) and one CSV per
// trace into out_dir (created if absent); returns the paths written
std::vector<std::string> emit_report(const ReportBundle& b, const std::string& out_dir);

}  // namespace mslab
