#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "amod/coverings/profile.hpp"
#include "amod/harness/families.hpp"
#include "amod/harness/profiles.hpp"
#include "amod/multipliers/symbol.hpp"
#include "amod/spaces/spaces.hpp"
#include "amod/spectral/grid.hpp"

namespace amod::cli {

using Json = nlohmann::ordered_json;

struct ToleranceConfig {
  GateTolerances gate;
  double plancherel = 1e-6;
  double ek_slope = 0.15;
  double ek_bracket = 10.0;
  double fm_drift = 0.05;
  double equivalence = 5.0;
  double mollifier = 0.10;
  double sum_deviation = 1e-8;
  double derivative_drift = 0.10;
  double fl1_ratio = 3.0;
  double fl1_drift = 0.01;
};

struct ProbeConfig {
  std::string name;
  FamilySpec family;
  bool adapted = false;
  ToleranceConfig tolerances;
  bool gate_sharpness = false;
  std::vector<SymbolSpec> symbols;
  std::vector<int> ks;
  double bump_radius = 0.25;
  std::vector<double> reach_fractions;
  Profile second_profile;
  std::vector<double> lambdas;
};

// Fully validated run configuration. `resolved` is the JSON document with
// every default filled in; it is what gets hashed and written next to
// reports.
struct RunConfig {
  double alpha = 0.0;
  int n = 1;
  std::size_t N = 2048;
  double L = 64.0;
  double xi_max = 16.0;
  Profile profile;
  SpaceSpec space;
  SymbolSpec symbol = SymbolSpec::zero();
  double delta = 0.0;
  std::optional<double> w;
  ProbeConfig probe;
  std::string input;
  std::filesystem::path output_dir;
  std::vector<std::string> formats;
  Json resolved;

  Grid grid() const;
  bool wants(const std::string& format) const;
};

// Default document; every accepted key appears here.
Json default_config();

// Merges `user` over the defaults, rejecting unknown keys and mistyped
// values, validates every field and fills derived defaults. Relative paths
// resolve against `base_dir`. Throws ConfigError.
RunConfig resolve_config(const Json& user, const std::filesystem::path& base_dir = {});

// Parses a JSON config file (ConfigError on unreadable or malformed input).
Json read_config_file(const std::filesystem::path& path);

// FNV-1a 64 of the canonical (sorted-key, compact) dump, as 16 hex digits.
std::string config_hash(const Json& resolved);

}  // namespace amod::cli
