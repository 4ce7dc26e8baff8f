#include "amod/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace amod {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::flagged: return "flagged";
  }
  return "fail";
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) throw std::logic_error("table row width mismatch in " + name);
  rows.push_back(std::move(row));
}

std::vector<double> Table::column(const std::string& col) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] != col) continue;
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[c]);
    return out;
  }
  throw std::out_of_range("no column " + col + " in table " + name);
}

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    out += columns[c];
  }
  out += '\n';
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out += ',';
      out += format_number(r[c]);
    }
    out += '\n';
  }
  return out;
}

void Report::set(const std::string& key, double value) {
  for (auto& [k, v] : scalars_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  scalars_.emplace_back(key, value);
}

bool Report::has(const std::string& key) const {
  for (const auto& kv : scalars_) {
    if (kv.first == key) return true;
  }
  return false;
}

double Report::scalar(const std::string& key) const {
  for (const auto& [k, v] : scalars_) {
    if (k == key) return v;
  }
  throw std::out_of_range("report " + kind_ + " has no scalar " + key);
}

const Check& Report::check(const std::string& name, double value, const std::string& relation,
                           double threshold) {
  bool ok = false;
  if (relation == "<") ok = value < threshold;
  else if (relation == "<=") ok = value <= threshold;
  else if (relation == ">") ok = value > threshold;
  else if (relation == ">=") ok = value >= threshold;
  else throw std::logic_error("unknown relation " + relation);
  checks_.push_back({name, value, relation, threshold, ok});
  return checks_.back();
}

const Check& Report::require(const std::string& name, bool condition) {
  checks_.push_back({name, condition ? 1.0 : 0.0, "==", 1.0, condition});
  return checks_.back();
}

bool Report::passed(const std::string& check_name) const {
  for (const auto& c : checks_) {
    if (c.name == check_name) return c.passed;
  }
  throw std::out_of_range("report " + kind_ + " has no check " + check_name);
}

void Report::flag(const std::string& message) { flags_.push_back(message); }

void Report::note(const std::string& message) { notes_.push_back(message); }

Table& Report::add_table(const std::string& name, std::vector<std::string> columns) {
  tables_.push_back({name, std::move(columns), {}});
  return tables_.back();
}

const Table& Report::table(const std::string& name) const {
  for (const auto& t : tables_) {
    if (t.name == name) return t;
  }
  throw std::out_of_range("report " + kind_ + " has no table " + name);
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (const auto& [k, v] : other.scalars_) set(prefix + "." + k, v);
  for (auto c : other.checks_) {
    c.name = prefix + "." + c.name;
    checks_.push_back(std::move(c));
  }
  for (const auto& f : other.flags_) flags_.push_back(prefix + ": " + f);
  for (const auto& n : other.notes_) notes_.push_back(prefix + ": " + n);
  for (auto t : other.tables_) {
    t.name = prefix + "." + t.name;
    tables_.push_back(std::move(t));
  }
}

Verdict Report::verdict() const {
  for (const auto& c : checks_) {
    if (!c.passed) return Verdict::fail;
  }
  return flags_.empty() ? Verdict::pass : Verdict::flagged;
}

}  // namespace amod
