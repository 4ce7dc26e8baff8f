#include "amod/cli/config.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "amod/errors.hpp"
#include "amod/report.hpp"

namespace amod::cli {

namespace {

const std::set<std::string> kProbeNames{"operator_norm", "plancherel", "profile",   "ek",
                                        "convolution",   "mollifier",  "bernstein", "norm_equivalence",
                                        "gamma"};

bool is_exponent_path(const std::string& path) {
  return path == "space.p" || path == "space.q";
}

Json symbol_defaults() {
  return Json{{"kind", "quadratic"}, {"t", 1.0}, {"beta", 2.0}, {"v", {0.0, 0.0}}, {"table_ref", ""}};
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError("config: " + path + ": " + what);
}

// Overlays `user` on `base` in place; `base` holds the defaults.
void merge(Json& base, const Json& user, const std::string& prefix) {
  if (!user.is_object()) fail(prefix.empty() ? "<root>" : prefix, "expected an object");
  for (const auto& [key, value] : user.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (!base.contains(key)) fail(path, "unknown key");
    Json& slot = base[key];
    if (slot.is_object()) {
      merge(slot, value, path);
    } else if (path == "probe.symbols") {
      if (!value.is_array()) fail(path, "expected an array of symbol objects");
      Json out = Json::array();
      for (std::size_t i = 0; i < value.size(); ++i) {
        Json sym = symbol_defaults();
        merge(sym, value[i], path + "[" + std::to_string(i) + "]");
        out.push_back(sym);
      }
      slot = out;
    } else if (slot.is_array()) {
      if (!value.is_array()) fail(path, "expected an array");
      Json out = Json::array();
      for (const auto& e : value) {
        if (!e.is_number()) fail(path, "expected numeric entries");
        out.push_back(e.is_number_integer() && path == "probe.ks" ? e : Json(e.get<double>()));
      }
      slot = out;
    } else if (slot.is_boolean()) {
      if (!value.is_boolean()) fail(path, "expected a boolean");
      slot = value;
    } else if (slot.is_string()) {
      if (!value.is_string()) fail(path, "expected a string");
      slot = value;
    } else if (slot.is_number_integer()) {
      if (!value.is_number_integer()) fail(path, "expected an integer");
      slot = value;
    } else if (is_exponent_path(path)) {
      if (!(value.is_number() || value.is_string())) fail(path, "expected a number or \"inf\"");
      slot = value.is_number() ? Json(value.get<double>()) : value;
    } else {
      // Floating defaults and optional (null) numbers.
      // Stored as double so 64 and 64.0 resolve (and hash) identically.
      if (!(value.is_number() || (slot.is_null() && value.is_null()))) fail(path, "expected a number");
      slot = value.is_null() ? Json() : Json(value.get<double>());
    }
  }
}

double number(const Json& j, const std::string& path) {
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "must be finite");
  return v;
}

double positive(const Json& j, const std::string& path) {
  const double v = number(j, path);
  if (!(v > 0.0)) fail(path, "must be positive");
  return v;
}

Exponent exponent(const Json& j, const std::string& path) {
  try {
    const Exponent e = j.is_string() ? Exponent::parse(j.get<std::string>()) : Exponent(j.get<double>());
    if (!e.is_infinite() && !(e.value() >= 1.0)) fail(path, "must lie in [1, inf]");
    return e;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

std::filesystem::path resolve_path(const std::string& p, const std::filesystem::path& base) {
  const std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

SymbolTable read_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read symbol table " + path.string());
  try {
    const Json j = Json::parse(in);
    SymbolTable t;
    t.start = j.at("start").get<double>();
    t.step = j.at("step").get<double>();
    t.values = j.at("values").get<std::vector<double>>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("symbol table " + path.string() + ": " + e.what());
  }
}

SymbolSpec symbol(const Json& j, const std::string& path, const std::filesystem::path& base) {
  SymbolKind kind;
  try {
    kind = parse_symbol_kind(j.at("kind").get<std::string>());
  } catch (const std::exception& e) {
    fail(path + ".kind", e.what());
  }
  const double t = number(j.at("t"), path + ".t");
  const double beta = number(j.at("beta"), path + ".beta");
  switch (kind) {
    case SymbolKind::quadratic: return SymbolSpec::quadratic(t);
    case SymbolKind::power: return SymbolSpec::power(t, beta);
    case SymbolKind::bracket_power: return SymbolSpec::bracket_power(t, beta);
    case SymbolKind::zero: return SymbolSpec::zero();
    case SymbolKind::linear: {
      const auto v = j.at("v").get<std::vector<double>>();
      if (v.size() != 2) fail(path + ".v", "expected two components");
      return SymbolSpec::linear({v[0], v[1]});
    }
    case SymbolKind::tabulated: {
      const std::string ref = j.at("table_ref").get<std::string>();
      if (ref.empty()) fail(path + ".table_ref", "required for tabulated symbols");
      return SymbolSpec::tabulated(read_table(resolve_path(ref, base)));
    }
  }
  fail(path, "unsupported symbol");
}

Profile profile(const Json& j, const std::string& path) {
  Profile p{number(j.at("r1"), path + ".r1"), number(j.at("r2"), path + ".r2")};
  try {
    p.validate();
  } catch (const ConfigError& e) {
    fail(path, e.what());
  }
  return p;
}

}  // namespace

Json default_config() {
  Json family{{"kind", "modulated_gaussians"},
              {"widths", {0.25, 0.5, 1.0, 2.0}},
              {"reach", nullptr},
              {"ladder_steps", 8},
              {"chirp_rates", {0.25, 1.0, 4.0}},
              {"adapted", false},
              {"cell_offsets", 4},
              {"count", 20},
              {"band", 2.0}};
  const ToleranceConfig t;
  Json tolerances{{"growth", t.gate.growth},
                  {"slope", t.gate.slope},
                  {"plancherel", t.plancherel},
                  {"ek_slope", t.ek_slope},
                  {"ek_bracket", t.ek_bracket},
                  {"fm_drift", t.fm_drift},
                  {"equivalence", t.equivalence},
                  {"mollifier", t.mollifier},
                  {"sum_deviation", t.sum_deviation},
                  {"derivative_drift", t.derivative_drift},
                  {"fl1_ratio", t.fl1_ratio},
                  {"fl1_drift", t.fl1_drift}};
  Json probe{{"name", "operator_norm"},
             {"seed", 1},
             {"family", family},
             {"tolerances", tolerances},
             {"gate_sharpness", false},
             {"symbols", Json::array()},
             {"ks", Json::array()},
             {"bump_radius", 0.25},
             {"reach_fractions", {0.25, 0.5, 0.75, 0.95}},
             {"second_profile", {{"r1", 0.3}, {"r2", 0.8}}},
             {"lambdas", {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0}}};
  return Json{{"alpha", 0.0},
              {"n", 1},
              {"N", 2048},
              {"L", 64.0},
              {"Xi_max", 16.0},
              {"profile", {{"r1", 0.45}, {"r2", 0.55}}},
              {"space", {{"p", 2.0}, {"q", 2.0}, {"s", 0.0}}},
              {"symbol", symbol_defaults()},
              {"delta", 0.0},
              {"w", nullptr},
              {"input", ""},
              {"probe", probe},
              {"output", {{"dir", "amod-out"}, {"formats", {"json", "csv"}}}}};
}

RunConfig resolve_config(const Json& user, const std::filesystem::path& base_dir) {
  Json doc = default_config();
  // output.formats holds strings, so it bypasses the numeric array rule.
  Json u = user;
  std::optional<Json> formats;
  if (u.is_object() && u.contains("output") && u["output"].is_object() &&
      u["output"].contains("formats")) {
    formats = u["output"]["formats"];
    u["output"].erase("formats");
  }
  merge(doc, u, "");
  if (formats) {
    if (!formats->is_array() || formats->empty()) fail("output.formats", "expected a non-empty array");
    for (const auto& f : *formats) {
      if (!f.is_string() || (f != "json" && f != "csv")) fail("output.formats", "entries must be \"json\" or \"csv\"");
    }
    doc["output"]["formats"] = *formats;
  }

  RunConfig c;
  c.alpha = number(doc["alpha"], "alpha");
  if (c.alpha < 0.0 || c.alpha > 1.0) fail("alpha", "must lie in [0, 1]");
  c.n = doc["n"].get<int>();
  if (c.n != 1 && c.n != 2) fail("n", "must be 1 or 2");
  const auto N = doc["N"].get<long long>();
  if (N < 2 || !std::has_single_bit(static_cast<unsigned long long>(N))) fail("N", "must be a power of two >= 2");
  c.N = static_cast<std::size_t>(N);
  c.L = positive(doc["L"], "L");
  c.xi_max = positive(doc["Xi_max"], "Xi_max");
  c.profile = profile(doc["profile"], "profile");
  c.space.p = exponent(doc["space"]["p"], "space.p");
  c.space.q = exponent(doc["space"]["q"], "space.q");
  c.space.s = number(doc["space"]["s"], "space.s");
  c.space.alpha = c.alpha;
  c.symbol = symbol(doc["symbol"], "symbol", base_dir);
  c.delta = number(doc["delta"], "delta");
  if (c.delta < 0.0) fail("delta", "must be nonnegative");
  if (doc["w"].is_null()) doc["w"] = 2.0 * c.alpha - 2.0 * c.delta;
  c.w = number(doc["w"], "w");
  c.input = doc["input"].get<std::string>();
  if (!c.input.empty()) c.input = resolve_path(c.input, base_dir).string();

  Json& pj = doc["probe"];
  ProbeConfig& p = c.probe;
  p.name = pj["name"].get<std::string>();
  if (!kProbeNames.contains(p.name)) fail("probe.name", "unknown probe '" + p.name + "'");
  if (pj["seed"].is_number_unsigned() ||
      (pj["seed"].is_number_integer() && pj["seed"].get<long long>() >= 0)) {
    p.family.seed = pj["seed"].get<std::uint64_t>();
  } else {
    fail("probe.seed", "must be a nonnegative integer");
  }
  Json& fj = pj["family"];
  try {
    p.family.kind = parse_family_kind(fj["kind"].get<std::string>());
  } catch (const std::exception& e) {
    fail("probe.family.kind", e.what());
  }
  p.family.widths = fj["widths"].get<std::vector<double>>();
  if (p.family.widths.empty()) fail("probe.family.widths", "must not be empty");
  for (double w : p.family.widths) {
    if (!(w > 0.0)) fail("probe.family.widths", "entries must be positive");
  }
  if (fj["reach"].is_null()) fj["reach"] = 0.5 * c.xi_max;
  p.family.reach = positive(fj["reach"], "probe.family.reach");
  p.family.ladder_steps = fj["ladder_steps"].get<int>();
  if (p.family.ladder_steps < 0) fail("probe.family.ladder_steps", "must be nonnegative");
  p.family.chirp_rates = fj["chirp_rates"].get<std::vector<double>>();
  p.adapted = fj["adapted"].get<bool>();
  if (p.adapted) p.family.adapted_alpha = c.alpha;
  p.family.cell_offsets = fj["cell_offsets"].get<int>();
  if (p.family.cell_offsets < 1) fail("probe.family.cell_offsets", "must be at least 1");
  const auto count = fj["count"].get<long long>();
  if (count < 1) fail("probe.family.count", "must be at least 1");
  p.family.count = static_cast<std::size_t>(count);
  p.family.band = positive(fj["band"], "probe.family.band");

  const Json& tj = pj["tolerances"];
  ToleranceConfig& t = p.tolerances;
  t.gate.growth = positive(tj["growth"], "probe.tolerances.growth");
  t.gate.slope = positive(tj["slope"], "probe.tolerances.slope");
  t.plancherel = positive(tj["plancherel"], "probe.tolerances.plancherel");
  t.ek_slope = positive(tj["ek_slope"], "probe.tolerances.ek_slope");
  t.ek_bracket = positive(tj["ek_bracket"], "probe.tolerances.ek_bracket");
  t.fm_drift = positive(tj["fm_drift"], "probe.tolerances.fm_drift");
  t.equivalence = positive(tj["equivalence"], "probe.tolerances.equivalence");
  if (t.equivalence < 1.0) fail("probe.tolerances.equivalence", "must be at least 1");
  t.mollifier = positive(tj["mollifier"], "probe.tolerances.mollifier");
  t.sum_deviation = positive(tj["sum_deviation"], "probe.tolerances.sum_deviation");
  t.derivative_drift = positive(tj["derivative_drift"], "probe.tolerances.derivative_drift");
  t.fl1_ratio = positive(tj["fl1_ratio"], "probe.tolerances.fl1_ratio");
  t.fl1_drift = positive(tj["fl1_drift"], "probe.tolerances.fl1_drift");

  p.gate_sharpness = pj["gate_sharpness"].get<bool>();
  if (pj["symbols"].empty()) pj["symbols"] = Json::array({doc["symbol"]});
  for (std::size_t i = 0; i < pj["symbols"].size(); ++i) {
    p.symbols.push_back(symbol(pj["symbols"][i], "probe.symbols[" + std::to_string(i) + "]", base_dir));
  }
  if (pj["ks"].empty()) {
    for (int k = 1; k <= 40; ++k) pj["ks"].push_back(k);
  }
  for (const auto& k : pj["ks"]) {
    if (!k.is_number_integer()) fail("probe.ks", "entries must be integers");
    p.ks.push_back(k.get<int>());
  }
  p.bump_radius = positive(pj["bump_radius"], "probe.bump_radius");
  p.reach_fractions = pj["reach_fractions"].get<std::vector<double>>();
  for (double r : p.reach_fractions) {
    if (!(r > 0.0 && r <= 1.0)) fail("probe.reach_fractions", "entries must lie in (0, 1]");
  }
  p.second_profile = profile(pj["second_profile"], "probe.second_profile");
  p.lambdas = pj["lambdas"].get<std::vector<double>>();
  for (double l : p.lambdas) {
    if (!(l > 0.0)) fail("probe.lambdas", "entries must be positive");
  }

  c.output_dir = doc["output"]["dir"].get<std::string>();
  c.formats = doc["output"]["formats"].get<std::vector<std::string>>();
  c.resolved = std::move(doc);
  return c;
}

Json read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
}

std::string config_hash(const Json& resolved) {
  const std::string canonical = nlohmann::json(resolved).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

Grid RunConfig::grid() const { return Grid(n, N, L, Side::frequency); }

bool RunConfig::wants(const std::string& format) const {
  for (const auto& f : formats) {
    if (f == format) return true;
  }
  return false;
}

}  // namespace amod::cli
