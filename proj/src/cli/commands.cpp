#include "amod/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include "CLI11.hpp"

#include "amod/cli/report.hpp"
#include "amod/coverings/dyadic.hpp"
#include "amod/coverings/partition.hpp"
#include "amod/coverings/verify.hpp"
#include "amod/errors.hpp"
#include "amod/harness/counterexample.hpp"
#include "amod/harness/ek.hpp"
#include "amod/harness/families.hpp"
#include "amod/harness/probes.hpp"
#include "amod/harness/profiles.hpp"
#include "amod/multipliers/unimodular.hpp"
#include "amod/spaces/class_norms.hpp"
#include "amod/spaces/spaces.hpp"
#include "amod/spectral/amsf.hpp"
#include "amod/spectral/bracket.hpp"
#include "amod/spectral/fit.hpp"
#include "amod/spectral/fourier.hpp"
#include "amod/spectral/norms.hpp"
#include "amod/spectral/parallel.hpp"

namespace amod::cli {

namespace {

AlphaLattice lattice(const RunConfig& c) { return AlphaLattice(c.alpha, c.n, c.xi_max); }

// Windows sampled on the configured grid.
PartitionFamily sampled_family(const RunConfig& c, const Profile& profile) {
  return build_partition(lattice(c), c.grid(), profile);
}

// Analytic windows only (𝓕L¹ profiles and index geometry).
PartitionFamily analytic_family(const RunConfig& c) { return PartitionFamily(lattice(c), c.profile); }

SampledFunction read_input(const RunConfig& c) {
  if (c.input.empty()) throw ConfigError("this command needs an AMSF1 input (--input or \"input\")");
  SampledFunction f = read_amsf(c.input);
  if (f.side() == Side::frequency) f = fourier_inverse(f);
  const Grid& g = f.grid();
  if (g.dim() != c.n || g.samples() != c.N || g.period() != c.L) {
    throw ConfigError("input grid (n = " + std::to_string(g.dim()) + ", N = " + std::to_string(g.samples()) +
                      ", L = " + format_number(g.period()) + ") does not match the config (n = " +
                      std::to_string(c.n) + ", N = " + std::to_string(c.N) + ", L = " + format_number(c.L) +
                      ")");
  }
  return f;
}

// Shells J with (4/3)·2^J >= Xi_max, capped by the grid.
int besov_shells(const RunConfig& c, const Grid& grid) {
  int j = 0;
  while ((4.0 / 3.0) * std::exp2(j) < c.xi_max) ++j;
  return std::min(j, dyadic_shell_count(grid));
}

Report ek_report(const RunConfig& c) {
  // The dilated windows of the largest k must stay inside the covered
  // region, so the analytic lattice extends as far as that requires.
  const double a = alpha_exponent(c.alpha);
  int kmax = 0;
  for (int k : c.probe.ks) kmax = std::max(kmax, std::abs(k));
  const double om = 1.0 - c.alpha;
  const double dilation = std::pow(bracket(kmax), c.delta / (om * om));
  const double reach = 1.2 * 1.01 * dilation * center_map(a, kmax + 0.6);
  const double xi_max = std::max(c.xi_max, reach);
  PartitionFamily family(AlphaLattice(c.alpha, c.n, xi_max), c.profile);
  Report r = ek_sweep(c.probe.ks, c.delta, family, {c.probe.tolerances.ek_slope, c.probe.tolerances.ek_bracket});
  r.set("lattice_xi_max", xi_max);
  return r;
}

}  // namespace

Report cmd_partition_verify(const RunConfig& c) {
  const PartitionFamily family = sampled_family(c, c.profile);
  const auto& t = c.probe.tolerances;
  return verify_partition(family, {t.sum_deviation, t.derivative_drift, t.fl1_ratio, t.fl1_drift});
}

Report cmd_norm(const RunConfig& c) {
  const SampledFunction f = read_input(c);
  Report report("norm");
  NormResult r;
  if (c.alpha == 1.0) {
    const DyadicFamily d(besov_shells(c, f.grid()), f.grid());
    r = besov_norm(f, c.space.p, c.space.q, c.space.s, d);
  } else {
    const PartitionFamily family = build_partition(lattice(c), f.grid(), c.profile);
    r = alpha_mod_norm(f, c.space, family);
  }
  Table& t = report.add_table("profile", {"index", "weight", "box_norm", "weighted"});
  for (std::size_t i = 0; i < r.index.size(); ++i) {
    t.add_row({static_cast<double>(r.index[i]), r.weight[i], r.box_norm[i], r.weight[i] * r.box_norm[i]});
  }
  report.set("norm", r.value);
  report.set("leakage", r.leakage);
  report.set("boxes", static_cast<double>(r.index.size()));
  report.require("finite", std::isfinite(r.value));
  return report;
}

Report cmd_multiplier_apply(const RunConfig& c) {
  const SampledFunction f = read_input(c);
  const SampledFunction g = apply_unimodular(f, c.symbol);
  std::filesystem::create_directories(c.output_dir);
  write_amsf(c.output_dir / "output.amsf", g);
  Report report("multiplier_apply");
  const double in = lp_norm(f, Exponent(2.0));
  const double out = lp_norm(g, Exponent(2.0));
  const double dev = in == 0.0 ? out : std::abs(out / in - 1.0);
  report.set("l2_in", in);
  report.set("l2_out", out);
  report.set("linf_in", lp_norm(f, Exponent::infinity()));
  report.set("linf_out", lp_norm(g, Exponent::infinity()));
  report.check("l2_deviation", dev, "<=", c.probe.tolerances.plancherel);
  report.note("output written to output.amsf");
  return report;
}

Report cmd_symbol_class(const RunConfig& c) {
  if (c.symbol.kind() == SymbolKind::tabulated) {
    throw ConfigError("the class profile needs a C^2 preset symbol");
  }
  const PartitionFamily family = analytic_family(c);
  const SymbolSpec& mu = c.symbol;
  const double w = *c.w;
  const ClassNormResult r =
      fm_class_norm([&](double xi) { return Complex(mu.second_derivative(xi)); }, w, family);
  Report report("symbol_class");
  Table& t = report.add_table("class", {"k", "bracket", "weighted_fl1", "converged"});
  std::vector<double> centers, scale;
  for (std::size_t i = 0; i < r.k.size(); ++i) {
    t.add_row({static_cast<double>(r.k[i]), bracket(r.k[i]), r.per_k[i], r.converged[i] ? 1.0 : 0.0});
    centers.push_back(family.lattice().center(r.k[i]));
    scale.push_back(bracket(r.k[i]));
    if (!r.converged[i]) report.flag("fl1 not converged for k = " + std::to_string(r.k[i]));
  }
  const InnerOuterSup s = inner_outer_sup(centers, r.per_k, c.xi_max);
  const double slope = upper_half_log_slope(scale, r.per_k);
  report.set("w", w);
  report.set("alpha", c.alpha);
  report.set("sup", s.full);
  report.set("sup_inner", s.inner);
  report.set("growth", s.growth());
  report.set("slope", slope);
  report.check("growth", s.growth(), "<", c.probe.tolerances.gate.growth);
  report.check("slope", slope, "<", c.probe.tolerances.gate.slope);

  // Pointwise functional on a geometric set of frequencies, for comparison.
  std::vector<double> points;
  for (double x = 1.0; x <= c.xi_max; x *= std::sqrt(2.0)) points.push_back(x);
  const Report m = mikhlin_class_check(
      {[&](double xi) { return mu.second_derivative(xi); }, {}}, w, points);
  report.absorb(m, "mikhlin");
  return report;
}

Report cmd_theorem(const RunConfig& c) {
  const ProbeConfig& p = c.probe;
  const auto& tol = p.tolerances;
  if (p.name == "operator_norm") {
    const PartitionFamily family = sampled_family(c, c.profile);
    ProbeSpec spec;
    spec.symbol = c.symbol;
    spec.space = c.space;
    spec.delta = c.delta;
    spec.family = p.family;
    spec.tol = tol.gate;
    spec.gate_sharpness = p.gate_sharpness;
    spec.enforce_threshold = !p.gate_sharpness;
    return operator_norm_probe(spec, family);
  }
  if (p.name == "plancherel") {
    const PartitionFamily family = sampled_family(c, c.profile);
    return plancherel_probe(p.symbols, make_family(p.family, family.grid()), family, tol.plancherel);
  }
  if (p.name == "profile") {
    return multiplier_fl1_profile(c.symbol, c.delta, analytic_family(c), tol.gate);
  }
  if (p.name == "ek") return ek_report(c);
  if (p.name == "gamma") {
    int limit = 0;
    for (int k : p.ks) limit = std::max(limit, std::abs(k));
    return gamma_sweep(analytic_family(c), limit);
  }
  if (p.name == "convolution") {
    const PartitionFamily family = sampled_family(c, c.profile);
    const auto pairs =
        convolution_pairs(family.grid(), p.family.count, p.family.reach, p.family.band, p.family.seed);
    return convolution_probe(pairs, c.space, family);
  }
  if (p.name == "mollifier") {
    const PartitionFamily family = sampled_family(c, c.profile);
    const SampledFunction f =
        random_band_limited(family.grid().with_side(Side::spatial), 0.0, p.family.band, p.family.seed);
    return mollifier_sweep(f, p.reach_fractions, c.space, family, tol.mollifier);
  }
  if (p.name == "bernstein") {
    const auto members = bernstein_family(c.grid(), p.lambdas, p.family.count, p.family.seed);
    return bernstein_probe(members, c.space.p, tol.gate);
  }
  if (p.name == "norm_equivalence") {
    const PartitionFamily first = sampled_family(c, c.profile);
    const PartitionFamily second = sampled_family(c, p.second_profile);
    return norm_equivalence_probe(make_family(p.family, first.grid()), c.space, first, second,
                                  tol.equivalence);
  }
  throw ConfigError("unknown probe '" + p.name + "'");
}

Report cmd_counterexample(const RunConfig& c) {
  return counterexample_h(CompactBump{c.probe.bump_radius}, analytic_family(c),
                          {c.probe.tolerances.fm_drift});
}

Report run_command(const std::string& command, const RunConfig& config) {
  if (command == "partition verify") return cmd_partition_verify(config);
  if (command == "norm compute") return cmd_norm(config);
  if (command == "multiplier apply") return cmd_multiplier_apply(config);
  if (command == "symbol class") return cmd_symbol_class(config);
  if (command == "theorem check") return cmd_theorem(config);
  if (command == "counterexample") return cmd_counterexample(config);
  throw ConfigError("unknown command '" + command + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"amod: alpha-modulation spaces and unimodular multipliers"};
  app.require_subcommand(1);
  std::string config_path, out_dir, threads = "auto", formats, input;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_dir, "output directory (overrides output.dir)");
  app.add_option("--seed", seed, "base seed (overrides probe.seed)");
  app.add_option("--threads", threads, "worker threads: a count or 'auto'");
  app.add_option("--format", formats, "comma-separated subset of json,csv");

  std::string command;
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& full,
                 const std::string& help, bool takes_input) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    if (takes_input) sub->add_option("--input", input, "AMSF1 function file");
    sub->final_callback([&command, full] { command = full; });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->require_subcommand(1);
    sub->fallthrough();
    return sub;
  };
  add(group("partition", "partition construction"), "verify", "partition verify",
      "build and certify the partition of unity", false);
  add(group("norm", "decomposition norms"), "compute", "norm compute", "alpha-modulation or Besov norm",
      true);
  add(group("multiplier", "unimodular multipliers"), "apply", "multiplier apply",
      "apply exp(i mu(D)) to a function", true);
  add(group("symbol", "symbol classes"), "class", "symbol class", "weighted FL1 class profile of mu''",
      false);
  add(group("theorem", "theorem probes"), "check", "theorem check", "run a probe scenario", false);
  add(&app, "counterexample", "counterexample", "separation of the symbol classes", false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::optional<Json> resolved;
  try {
    if (threads == "auto") {
      parallel::set_thread_count(0);
    } else {
      int k = 0;
      try {
        k = std::stoi(threads);
      } catch (const std::exception&) {
        throw ConfigError("--threads must be a positive integer or 'auto'");
      }
      if (k < 1) throw ConfigError("--threads must be a positive integer or 'auto'");
      parallel::set_thread_count(static_cast<unsigned>(k));
    }
    Json user = Json::object();
    std::filesystem::path base;
    if (!config_path.empty()) {
      user = read_config_file(config_path);
      base = std::filesystem::path(config_path).parent_path();
    }
    if (!user.is_object()) throw ConfigError("config: <root>: expected an object");
    if (!out_dir.empty()) user["output"]["dir"] = out_dir;
    if (seed) user["probe"]["seed"] = *seed;
    if (!formats.empty()) {
      Json list = Json::array();
      std::size_t start = 0;
      while (start <= formats.size()) {
        const std::size_t end = std::min(formats.find(',', start), formats.size());
        list.push_back(formats.substr(start, end - start));
        start = end + 1;
      }
      user["output"]["formats"] = list;
    }
    if (!input.empty()) user["input"] = std::filesystem::absolute(input).string();
    RunConfig config = resolve_config(user, base);
    resolved = config.resolved;

    const auto t0 = std::chrono::steady_clock::now();
    const Report report = run_command(command, config);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_report(report, config, command, seconds);

    if (command == "norm compute") out << format_number(report.scalar("norm")) << '\n';
    out << command << ": " << to_string(report.verdict()) << " (" << config.output_dir.string() << ")\n";
    for (const auto& ch : report.checks()) {
      if (!ch.passed) {
        out << "  failed " << ch.name << ": " << format_number(ch.value) << ' ' << ch.relation << ' '
            << format_number(ch.threshold) << '\n';
      }
    }
    for (const auto& f : report.flags()) out << "  flag: " << f << '\n';
    return exit_code(report.verdict());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (resolved) {
      try {
        const std::filesystem::path dir = (*resolved)["output"]["dir"].get<std::string>();
        std::filesystem::create_directories(dir);
        write_json(dir / "report.json", error_json(command, e.what(), &*resolved));
      } catch (const std::exception&) {
      }
    }
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace amod::cli
