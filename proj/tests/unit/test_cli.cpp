#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "amod/cli/commands.hpp"
#include "amod/cli/config.hpp"
#include "amod/errors.hpp"
#include "amod/spectral/amsf.hpp"

using namespace amod;
using namespace amod::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("amod_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = run_cli(args, o, e);
  if (out) *out = o.str();
  return code;
}

Json read_json(const fs::path& p) {
  std::ifstream in(p);
  return Json::parse(in);
}

}  // namespace

TEST(Config, UnknownKeysAndTypesAreRejected) {
  EXPECT_THROW(resolve_config(Json::parse(R"({"alpah": 0.5})")), ConfigError);
  EXPECT_THROW(resolve_config(Json::parse(R"({"space": {"p": "two"}})")), ConfigError);
  EXPECT_THROW(resolve_config(Json::parse(R"({"N": 1000})")), ConfigError);
  try {
    resolve_config(Json::parse(R"({"probe": {"family": {"widht": 1}}})"));
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("widht"), std::string::npos);
  }
}

TEST(Config, DefaultsAndHashStability) {
  const RunConfig c = resolve_config(Json::object());
  EXPECT_EQ(c.N, 2048u);
  EXPECT_EQ(c.L, 64.0);
  EXPECT_EQ(c.xi_max, 16.0);
  ASSERT_TRUE(c.w.has_value());
  EXPECT_EQ(*c.w, 0.0);
  const std::string h = config_hash(c.resolved);
  EXPECT_EQ(h.size(), 16u);
  EXPECT_EQ(config_hash(resolve_config(Json::parse(R"({"L": 64})")).resolved), h);
  EXPECT_EQ(config_hash(resolve_config(Json::parse(R"({"L": 64.0})")).resolved), h);
  EXPECT_NE(config_hash(resolve_config(Json::parse(R"({"L": 32})")).resolved), h);
}

TEST(Cli, ZeroFunctionHasZeroNorm) {
  const fs::path dir = scratch("zero");
  write_amsf(dir / "zero.amsf", SampledFunction::zeros(Grid(1, 2048, 64.0, Side::spatial)));
  std::string out;
  EXPECT_EQ(run({"norm", "compute", "--input", (dir / "zero.amsf").string(), "--out", (dir / "run").string()},
                &out),
            0);
  EXPECT_EQ(out.substr(0, 2), "0\n");
  const Json rep = read_json(dir / "run" / "report.json");
  EXPECT_EQ(rep["scalars"]["norm"], 0.0);
  EXPECT_EQ(rep["exit_code"], 0);
  EXPECT_TRUE(fs::exists(dir / "run" / "config.resolved.json"));
  EXPECT_TRUE(fs::exists(dir / "run" / "profile.csv"));
}

TEST(Cli, LeakedInputIsAPreconditionError) {
  const fs::path dir = scratch("leak");
  const Grid g(1, 2048, 64.0, Side::spatial);
  // A narrow spatial spike has a flat spectrum reaching |ξ| = 16 > Xi_max = 8.
  std::vector<Complex> v(g.size());
  v[g.size() / 2] = 1.0;
  write_amsf(dir / "spike.amsf", SampledFunction(g, v));
  std::ofstream(dir / "cfg.json") << R"({"Xi_max": 8})";
  EXPECT_EQ(run({"--config", (dir / "cfg.json").string(), "norm", "compute", "--input",
                 (dir / "spike.amsf").string(), "--out", (dir / "run").string()}),
            2);
  const Json rep = read_json(dir / "run" / "report.json");
  EXPECT_EQ(rep["exit_code"], 2);
  EXPECT_NE(rep["error"].get<std::string>().find("energy fraction"), std::string::npos);
}

TEST(Cli, BadProfileAndUnknownKeyExitTwo) {
  const fs::path dir = scratch("bad");
  std::ofstream(dir / "p.json") << R"({"profile": {"r1": 0.6, "r2": 0.5}})";
  std::ofstream(dir / "k.json") << R"({"bogus": 1})";
  EXPECT_EQ(run({"--config", (dir / "p.json").string(), "partition", "verify", "--out", (dir / "a").string()}), 2);
  EXPECT_EQ(run({"--config", (dir / "k.json").string(), "partition", "verify", "--out", (dir / "b").string()}), 2);
  EXPECT_EQ(run({"frobnicate"}), 2);
}

TEST(Cli, ScenarioVerdictsMapToExitCodes) {
  const fs::path dir = scratch("scenarios");
  const fs::path sc(AMOD_SCENARIO_DIR);
  EXPECT_EQ(run({"--config", (sc / "plancherel.json").string(), "theorem", "check", "--out",
                 (dir / "plancherel").string()}),
            0);
  const Json rep = read_json(dir / "plancherel" / "report.json");
  EXPECT_EQ(rep["schema_version"], 1);
  EXPECT_EQ(rep["verdict"], "pass");
  EXPECT_EQ(rep["command"], "theorem check");
  EXPECT_EQ(rep["config"]["probe"]["seed"], 7);
  EXPECT_EQ(rep["config_hash"], config_hash(read_json(dir / "plancherel" / "config.resolved.json")));
  EXPECT_TRUE(fs::exists(dir / "plancherel" / "ratios.csv"));

  EXPECT_EQ(run({"--config", (sc / "sharpness_gate.json").string(), "--threads", "2", "theorem", "check",
                 "--out", (dir / "gate").string()}),
            1);
  EXPECT_EQ(read_json(dir / "gate" / "report.json")["verdict"], "fail");
}

TEST(Cli, MultiplierApplyWritesOutputFunction) {
  const fs::path dir = scratch("apply");
  write_amsf(dir / "zero.amsf", SampledFunction::zeros(Grid(1, 2048, 64.0, Side::spatial)));
  std::ofstream(dir / "cfg.json") << R"({"symbol": {"kind": "quadratic", "t": 1}})";
  EXPECT_EQ(run({"--config", (dir / "cfg.json").string(), "multiplier", "apply", "--input",
                 (dir / "zero.amsf").string(), "--out", (dir / "run").string()}),
            0);
  const SampledFunction back = read_amsf(dir / "run" / "output.amsf");
  EXPECT_EQ(max_abs(back), 0.0);
}
