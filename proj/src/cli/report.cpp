#include "amod/cli/report.hpp"

#include <cmath>
#include <fstream>

#include "amod/errors.hpp"

namespace amod::cli {

namespace {

Json number_json(double v) {
  if (std::isfinite(v)) return Json(v);
  return Json(format_number(v));
}

std::string csv_name(const std::string& table) { return table + ".csv"; }

}  // namespace

int exit_code(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::flagged: return 3;
  }
  return 1;
}

Json report_json(const Report& report, const RunConfig& config, const std::string& command,
                 double seconds) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["kind"] = report.kind();
  doc["verdict"] = to_string(report.verdict());
  doc["exit_code"] = exit_code(report.verdict());
  doc["config_hash"] = config_hash(config.resolved);
  Json scalars = Json::object();
  for (const auto& [k, v] : report.scalars()) scalars[k] = number_json(v);
  doc["scalars"] = scalars;
  Json checks = Json::array();
  for (const auto& c : report.checks()) {
    checks.push_back({{"name", c.name},
                      {"value", number_json(c.value)},
                      {"relation", c.relation},
                      {"threshold", number_json(c.threshold)},
                      {"passed", c.passed}});
  }
  doc["checks"] = checks;
  doc["flags"] = report.flags();
  doc["notes"] = report.notes();
  Json tables = Json::array();
  for (const auto& t : report.tables()) {
    Json entry{{"name", t.name}, {"columns", t.columns}, {"rows", t.rows.size()}};
    if (config.wants("csv")) {
      entry["csv"] = csv_name(t.name);
    } else {
      Json rows = Json::array();
      for (const auto& row : t.rows) {
        Json r = Json::array();
        for (double v : row) r.push_back(number_json(v));
        rows.push_back(r);
      }
      entry["data"] = rows;
    }
    tables.push_back(entry);
  }
  doc["tables"] = tables;
  doc["timing"] = {{"seconds", seconds}};
  doc["config"] = config.resolved;
  return doc;
}

Json error_json(const std::string& command, const std::string& message, const Json* resolved) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["verdict"] = "error";
  doc["exit_code"] = 2;
  doc["error"] = message;
  if (resolved) {
    doc["config_hash"] = config_hash(*resolved);
    doc["config"] = *resolved;
  }
  return doc;
}

void write_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

void write_report(const Report& report, const RunConfig& config, const std::string& command,
                  double seconds) {
  std::filesystem::create_directories(config.output_dir);
  write_json(config.output_dir / "config.resolved.json", config.resolved);
  if (config.wants("json")) {
    write_json(config.output_dir / "report.json", report_json(report, config, command, seconds));
  }
  if (config.wants("csv")) {
    for (const auto& t : report.tables()) {
      std::ofstream out(config.output_dir / csv_name(t.name));
      if (!out) throw ConfigError("cannot write " + (config.output_dir / csv_name(t.name)).string());
      out << t.to_csv();
    }
  }
}

}  // namespace amod::cli
