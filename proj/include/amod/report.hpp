#pragma once

#include <string>
#include <utility>
#include <vector>

namespace amod {

enum class Verdict { pass, fail, flagged };

std::string to_string(Verdict verdict);

// One declared tolerance: value <relation> threshold.
struct Check {
  std::string name;
  double value = 0.0;
  std::string relation;
  double threshold = 0.0;
  bool passed = false;
};

// Numeric per-item profile (per k, per test function, ...).
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  std::vector<double> column(const std::string& name) const;
  // Header plus one line per row; numbers in shortest round-trip form.
  std::string to_csv() const;
};

// Structured result of a verification or probe run. Insertion order of
// scalars, checks and tables is preserved so serialization is deterministic.
class Report {
 public:
  explicit Report(std::string kind) : kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

  void set(const std::string& key, double value);
  bool has(const std::string& key) const;
  // Throws std::out_of_range for unknown keys.
  double scalar(const std::string& key) const;
  const std::vector<std::pair<std::string, double>>& scalars() const { return scalars_; }

  // relation is one of "<", "<=", ">", ">=".
  const Check& check(const std::string& name, double value, const std::string& relation,
                     double threshold);
  const Check& require(const std::string& name, bool condition);
  const std::vector<Check>& checks() const { return checks_; }
  bool passed(const std::string& check_name) const;

  // Numerical flags (non-convergence, skipped items). Flags alone make the
  // verdict "flagged"; failed checks take precedence.
  void flag(const std::string& message);
  const std::vector<std::string>& flags() const { return flags_; }

  void note(const std::string& message);
  const std::vector<std::string>& notes() const { return notes_; }

  Table& add_table(const std::string& name, std::vector<std::string> columns);
  const Table& table(const std::string& name) const;
  const std::vector<Table>& tables() const { return tables_; }

  // Appends everything of `other`, prefixing names with "<prefix>.".
  void absorb(const Report& other, const std::string& prefix);

  Verdict verdict() const;

 private:
  std::string kind_;
  std::vector<std::pair<std::string, double>> scalars_;
  std::vector<Check> checks_;
  std::vector<std::string> flags_;
  std::vector<std::string> notes_;
  std::vector<Table> tables_;
};

// Shortest decimal that round-trips a double; "nan", "inf", "-inf" otherwise.
std::string format_number(double value);

}  // namespace amod
