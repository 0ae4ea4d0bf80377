#include "mslab/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "mslab/common.hpp"

namespace mslab {

namespace {

std::string format_double(double x) {
  if (std::isnan(x)) return "\"nan\"";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", x);
  return buf;
}

}  // namespace

std::string render_json(const nlohmann::json& v) {
  switch (v.type()) {
    case nlohmann::json::value_t::null:
      return "null";
    case nlohmann::json::value_t::boolean:
      return v.get<bool>() ? "true" : "false";
    case nlohmann::json::value_t::number_integer:
      return std::to_string(v.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return std::to_string(v.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
      return format_double(v.get<double>());
    case nlohmann::json::value_t::string:
      return nlohmann::json(v.get<std::string>()).dump();  // quoting + escapes
    case nlohmann::json::value_t::array: {
      std::string out = "[";
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ",";
        out += render_json(v[k]);
      }
      return out + "]";
    }
    case nlohmann::json::value_t::object: {
      // nlohmann objects iterate in key order, which pins the byte layout
      std::string out = "{";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",";
        first = false;
        out += nlohmann::json(it.key()).dump();
        out += ":";
        out += render_json(it.value());
      }
      return out + "}";
    }
    default:
      throw ConfigError("report bodies may not contain binary values");
  }
}

std::string render_trace_csv(const TraceSeries& t) {
  std::string out = "index,value\n";
  char buf[48];
  for (std::size_t k = 0; k < t.values.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%zu,%.12e\n", k, t.values[k]);
    out += buf;
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + p.string() + " for writing");
  f.write(content.data(), static_cast<std::streamoff>(content.size()));
  f.flush();
  if (!f) throw std::runtime_error("write failed for " + p.string());
}

}  // namespace

std::vector<std::string> emit_report(const ReportBundle& b, const std::string& out_dir) {
  if (!b.body.is_object())
    throw ConfigError("a report body must be a JSON object");
  const std::string stem = b.scenario.empty() ? "report" : b.scenario;
  std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

  nlohmann::json envelope = b.body;
  envelope["scenario"] = stem;
  nlohmann::json files = nlohmann::json::array();
  for (const auto& t : b.traces) {
    if (t.name.empty()) throw ConfigError("trace series need a name");
    files.push_back(stem + "_" + t.name + ".csv");
  }
  envelope["trace_files"] = files;

  std::vector<std::string> written;
  std::filesystem::path jpath = dir / (stem + ".json");
  write_file(jpath, render_json(envelope) + "\n");
  written.push_back(jpath.string());
  for (const auto& t : b.traces) {
    std::filesystem::path cpath = dir / (stem + "_" + t.name + ".csv");
    write_file(cpath, render_trace_csv(t));
    written.push_back(cpath.string());
  }
  return written;
}

}  // namespace mslab
