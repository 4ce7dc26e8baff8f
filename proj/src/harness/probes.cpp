#include "amod/harness/probes.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "amod/coverings/verify.hpp"
#include "amod/errors.hpp"
#include "amod/multipliers/unimodular.hpp"
#include "amod/spectral/bracket.hpp"
#include "amod/spectral/fit.hpp"
#include "amod/spectral/fourier.hpp"
#include "amod/spectral/norms.hpp"
#include "amod/spectral/parallel.hpp"

namespace amod {

double loss_threshold(Exponent p, double s) {
  return std::abs(p.reciprocal() - 0.5) * std::max(2.0 * s, 0.0);
}

namespace {

SpaceSpec with_s(const SpaceSpec& spec, double s) {
  SpaceSpec out = spec;
  out.s = s;
  return out;
}

struct Gate {
  double sup = 0.0;
  double sup_inner = 0.0;
  double growth = 0.0;
  double slope = 0.0;
  bool monotone = true;
};

// Stability of per-member ratios against the modulation reach: per ladder
// point the max ratio (envelope over its cell), the sup over points
// <= reach/2 against all, and the upper-half log–log slope against ⟨point⟩.
Gate reach_gate(const std::vector<double>& centers, const std::vector<double>& ratios, double reach) {
  std::map<double, double> per_center;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (std::isnan(ratios[i])) continue;
    const double c = std::abs(centers[i]);
    per_center[c] = std::max(per_center[c], ratios[i]);
  }
  Gate g;
  std::vector<double> scale, value;
  double prev = -INFINITY;
  for (const auto& [c, r] : per_center) {
    g.sup = std::max(g.sup, r);
    if (c <= 0.5 * reach) g.sup_inner = std::max(g.sup_inner, r);
    scale.push_back(bracket(c));
    value.push_back(r);
    if (r < prev) g.monotone = false;
    prev = r;
  }
  g.growth = relative_growth(g.sup_inner, g.sup);
  g.slope = upper_half_log_slope(scale, value);
  return g;
}

}  // namespace

Report operator_norm_probe(const ProbeSpec& spec, const PartitionFamily& family) {
  const double threshold = loss_threshold(spec.space.p, spec.space.s);
  Report report("operator_norm_probe");
  if (spec.delta < threshold) {
    if (spec.enforce_threshold) {
      throw PreconditionError("delta " + format_number(spec.delta) + " is below the loss threshold " +
                              format_number(threshold));
    }
    report.note("delta below the loss threshold; gate applied as configured");
  }
  const std::vector<FamilyMember> members = make_family(spec.family, family.grid());
  const std::size_t n = members.size();
  std::vector<double> num(n), den(n), den_half(n);
  const double half = 0.5 * spec.delta;
  parallel::for_each_index(n, [&](std::size_t i) {
    const SampledFunction& f = members[i].f;
    const SampledFunction g = apply_unimodular(f, spec.symbol);
    num[i] = alpha_mod_norm(g, with_s(spec.space, 0.0), family).value;
    const NormResult fr = alpha_mod_norm(f, with_s(spec.space, spec.delta), family);
    den[i] = fr.value;
    if (spec.sharpness_diagnostic) {
      std::vector<double> w;
      for (int k : fr.index) w.push_back(std::pow(bracket(k), half / (1.0 - spec.space.alpha)));
      den_half[i] = lq_combine(w, fr.box_norm, spec.space.q);
    }
  });

  Table& t = report.add_table("members", {"index", "ladder_point", "center", "width", "numerator",
                                          "denominator", "ratio", "ratio_half_delta"});
  std::vector<double> centers, ratios, ratios_half;
  for (std::size_t i = 0; i < n; ++i) {
    double r = NAN, rh = NAN;
    if (den[i] == 0.0) {
      report.flag("zero denominator for " + members[i].label + "; skipped");
    } else {
      r = num[i] / den[i];
      if (spec.sharpness_diagnostic) rh = num[i] / den_half[i];
    }
    t.add_row({static_cast<double>(i), members[i].ladder_point, members[i].center, members[i].width,
               num[i], den[i], r, rh});
    centers.push_back(members[i].ladder_point);
    ratios.push_back(r);
    ratios_half.push_back(rh);
  }
  const Gate g = reach_gate(centers, ratios, spec.family.reach);
  report.set("alpha", spec.space.alpha);
  report.set("p_reciprocal", spec.space.p.reciprocal());
  report.set("q_reciprocal", spec.space.q.reciprocal());
  report.set("symbol_class_s", spec.space.s);
  report.set("delta", spec.delta);
  report.set("threshold", threshold);
  report.set("reach", spec.family.reach);
  report.set("sup", g.sup);
  report.set("sup_inner", g.sup_inner);
  report.set("growth", g.growth);
  report.set("slope", g.slope);
  report.check("growth", g.growth, "<", spec.tol.growth);
  report.check("slope", g.slope, "<", spec.tol.slope);
  if (spec.sharpness_diagnostic) {
    const Gate h = reach_gate(centers, ratios_half, spec.family.reach);
    report.set("sharpness.delta", half);
    report.set("sharpness.sup", h.sup);
    report.set("sharpness.growth", h.growth);
    report.set("sharpness.slope", h.slope);
    report.set("sharpness.monotone", h.monotone ? 1.0 : 0.0);
    if (spec.gate_sharpness) {
      report.check("sharpness.growth", h.growth, "<", spec.tol.growth);
      report.check("sharpness.slope", h.slope, "<", spec.tol.slope);
    }
  }
  return report;
}

Report plancherel_probe(const std::vector<SymbolSpec>& symbols,
                        const std::vector<FamilyMember>& functions, const PartitionFamily& family,
                        double tolerance) {
  const std::vector<Exponent> qs{Exponent(1.0), Exponent(2.0), Exponent::infinity()};
  const SpaceSpec base{Exponent(2.0), Exponent(2.0), 0.0, family.alpha()};
  const std::size_t nf = functions.size();
  const std::size_t total = symbols.size() * nf;
  std::vector<std::vector<double>> ratio(total, std::vector<double>(qs.size()));
  parallel::for_each_index(total, [&](std::size_t idx) {
    const SymbolSpec& s = symbols[idx / nf];
    const SampledFunction& f = functions[idx % nf].f;
    const NormResult a = alpha_mod_norm(apply_unimodular(f, s), base, family);
    const NormResult b = alpha_mod_norm(f, base, family);
    for (std::size_t j = 0; j < qs.size(); ++j) {
      ratio[idx][j] = lq_combine(a.weight, a.box_norm, qs[j]) / lq_combine(b.weight, b.box_norm, qs[j]);
    }
  });
  Report report("plancherel");
  Table& t = report.add_table("ratios", {"symbol", "function", "q", "ratio"});
  double worst = 0.0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    for (std::size_t j = 0; j < qs.size(); ++j) {
      const double q = qs[j].is_infinite() ? INFINITY : qs[j].value();
      t.add_row({static_cast<double>(idx / nf), static_cast<double>(idx % nf), q, ratio[idx][j]});
      worst = std::max(worst, std::abs(ratio[idx][j] - 1.0));
    }
  }
  report.set("max_deviation", worst);
  report.check("max_deviation", worst, "<=", tolerance);
  return report;
}

double convolution_bound(double s, const PartitionFamily& family) {
  const double e = s / (1.0 - family.alpha());
  double bound = 0.0;
  for (int k : family.lattice().indices()) {
    double sum = 0.0;
    for (int l : family.overlap_neighbors(k)) sum += std::pow(bracket(l) / bracket(k), e);
    bound = std::max(bound, sum);
  }
  return bound;
}

ConvolutionRatio convolution_ratio(const SampledFunction& f, const SampledFunction& g,
                                   const SpaceSpec& spec, const PartitionFamily& family) {
  const SampledFunction fh = fourier_forward(f);
  const SampledFunction gh = fourier_forward(g);
  const SampledFunction conv = fourier_inverse(fh.multiplied(gh.values()));
  ConvolutionRatio r;
  r.numerator = alpha_mod_norm(conv, with_s(spec, 0.0), family).value;
  r.f_norm = alpha_mod_norm(f, spec, family).value;
  const SpaceSpec g_space{Exponent(1.0), Exponent::infinity(), -spec.s, spec.alpha};
  r.g_norm = alpha_mod_norm(g, g_space, family).value;
  const double den = r.f_norm * r.g_norm;
  r.ratio = den == 0.0 ? NAN : r.numerator / den;
  return r;
}

std::vector<std::pair<SampledFunction, SampledFunction>> convolution_pairs(
    const Grid& grid, std::size_t count, double reach, double band, std::uint64_t seed) {
  std::vector<std::pair<SampledFunction, SampledFunction>> out;
  const Grid g = grid.with_side(Side::spatial);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(seed, i);
    NormalStream pick(s);
    const double c = (2.0 * pick.uniform() - 1.0) * reach;
    const double bf = band * (0.5 + 0.5 * pick.uniform());
    const double bg = band * (0.5 + pick.uniform());
    out.emplace_back(random_band_limited(g, c, bf, derive_seed(s, 1)),
                     random_band_limited(g, c, bg, derive_seed(s, 2)));
  }
  return out;
}

Report convolution_probe(const std::vector<std::pair<SampledFunction, SampledFunction>>& pairs,
                         const SpaceSpec& spec, const PartitionFamily& family) {
  std::vector<ConvolutionRatio> rs(pairs.size());
  parallel::for_each_index(pairs.size(), [&](std::size_t i) {
    rs[i] = convolution_ratio(pairs[i].first, pairs[i].second, spec, family);
  });
  const double bound = convolution_bound(spec.s, family);
  Report report("convolution_probe");
  Table& t = report.add_table("pairs", {"index", "numerator", "f_norm", "g_norm", "ratio"});
  double worst = 0.0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    t.add_row({static_cast<double>(i), rs[i].numerator, rs[i].f_norm, rs[i].g_norm, rs[i].ratio});
    if (std::isnan(rs[i].ratio)) {
      report.flag("zero denominator for pair " + std::to_string(i) + "; skipped");
      continue;
    }
    worst = std::max(worst, rs[i].ratio);
  }
  report.set("s", spec.s);
  report.set("max_ratio", worst);
  report.set("bound", bound);
  // The bound is exact up to the admitted spectral leakage.
  report.check("max_ratio_over_bound", worst / bound, "<=", 1.0 + 1e-4);
  return report;
}

Report mollifier_sweep(const SampledFunction& f, const std::vector<double>& reach_fractions,
                       const SpaceSpec& spec, const PartitionFamily& family, double tolerance) {
  const double radius = family.grid_covered_radius();
  const Grid freq = family.grid();
  Report report("mollifier_sweep");
  Table& t = report.add_table("sweep", {"reach_fraction", "cutoff_radius", "ratio"});
  std::vector<double> ratios;
  for (double frac : reach_fractions) {
    // ĝ = 1 on |ξ| <= frac·R/2, supported in |ξ| <= frac·R.
    const Cutoff psi{0.5 * frac * radius};
    std::vector<Complex> v(freq.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = psi(freq.coordinate(i));
    const SampledFunction g = fourier_inverse(SampledFunction(freq, std::move(v)));
    const ConvolutionRatio r = convolution_ratio(f, g, spec, family);
    t.add_row({frac, psi.radius, r.ratio});
    ratios.push_back(r.ratio);
  }
  double change = INFINITY;
  if (ratios.size() >= 2) {
    const double a = ratios[ratios.size() - 2], b = ratios.back();
    change = std::abs(b - a) / std::abs(a);
  }
  report.set("last_relative_change", change);
  report.set("final_ratio", ratios.empty() ? NAN : ratios.back());
  report.check("last_relative_change", change, "<", tolerance);
  return report;
}

int bernstein_order(Exponent p) {
  return static_cast<int>(std::floor(p.reciprocal() - 0.5)) + 1;
}

BernsteinRatio bernstein_ratio(const SampledFunction& g, Exponent p) {
  if (!p.is_infinite() && p.value() > 2.0) throw DomainError("bernstein estimate needs p <= 2");
  if (p.is_infinite()) throw DomainError("bernstein estimate needs p <= 2");
  if (g.side() != Side::frequency || g.grid().dim() != 1) {
    throw ConfigError("bernstein_ratio expects a one-dimensional frequency-side function");
  }
  const int order = bernstein_order(p);
  const double h = g.grid().frequency_step();
  std::vector<Complex> d(g.values().begin(), g.values().end());
  BernsteinRatio r;
  r.lp = lp_norm(fourier_inverse(g), p);
  r.sobolev = lp_norm(g, Exponent(2.0));
  for (int j = 1; j <= order; ++j) {
    std::vector<Complex> next(d.size(), Complex(0.0));
    for (std::size_t i = 1; i + 1 < d.size(); ++i) next[i] = (d[i + 1] - d[i - 1]) / (2.0 * h);
    d = std::move(next);
    r.sobolev += lp_norm(SampledFunction(g.grid(), d), Exponent(2.0));
  }
  r.ratio = r.lp / r.sobolev;
  return r;
}

std::vector<BernsteinMember> bernstein_family(const Grid& grid, const std::vector<double>& lambdas,
                                              std::size_t random_count, std::uint64_t seed) {
  const Grid freq = grid.with_side(Side::frequency);
  std::vector<BernsteinMember> out;
  const Profile base{0.5, 1.0};
  for (double lambda : lambdas) {
    out.push_back({"dilation(" + format_number(lambda) + ")", lambda,
                   SampledFunction::sample(freq, [&](double xi) { return base(lambda * xi); })});
  }
  for (std::size_t i = 0; i < random_count; ++i) {
    NormalStream pick(derive_seed(seed, i));
    const double radius = 0.25 + 1.75 * pick.uniform();
    const double inner = radius * (0.2 + 0.6 * pick.uniform());
    const double center = 4.0 * pick.uniform() - 2.0;
    const Profile prof{inner, radius};
    out.push_back({"bump(" + std::to_string(i) + ")", 1.0,
                   SampledFunction::sample(freq, [&](double xi) { return prof(xi - center); })});
  }
  return out;
}

Report bernstein_probe(const std::vector<BernsteinMember>& members, Exponent p,
                       const GateTolerances& tol) {
  std::vector<BernsteinRatio> rs(members.size());
  parallel::for_each_index(members.size(), [&](std::size_t i) { rs[i] = bernstein_ratio(members[i].g, p); });
  Report report("bernstein_probe");
  Table& t = report.add_table("members", {"index", "scale", "lp", "sobolev", "ratio"});
  double reach = 0.0;
  for (const auto& m : members) reach = std::max(reach, std::abs(std::log2(m.scale)));
  double sup = 0.0, sup_inner = 0.0;
  bool finite = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    t.add_row({static_cast<double>(i), members[i].scale, rs[i].lp, rs[i].sobolev, rs[i].ratio});
    finite = finite && std::isfinite(rs[i].ratio);
    sup = std::max(sup, rs[i].ratio);
    if (std::abs(std::log2(members[i].scale)) <= reach - 1.0 + 1e-12) {
      sup_inner = std::max(sup_inner, rs[i].ratio);
    }
  }
  const double growth = relative_growth(sup_inner, sup);
  report.set("p_reciprocal", p.reciprocal());
  report.set("order", bernstein_order(p));
  report.set("sup", sup);
  report.set("sup_inner", sup_inner);
  report.set("growth", growth);
  report.require("finite", finite);
  if (!p.is_infinite() && p.value() == 2.0) {
    // The ratio rises toward its exact bound 1 as the bump widens, so the sup
    // cannot stabilise under reach doubling; the explicit bound is the check.
    report.check("sup_p2", sup, "<=", 1.0 + 1e-6);
    report.note("p = 2: growth recorded only; bounded by Parseval");
  } else {
    report.check("growth", growth, "<", tol.growth);
  }
  return report;
}

Report norm_equivalence_probe(const std::vector<FamilyMember>& functions, const SpaceSpec& spec,
                              const PartitionFamily& first, const PartitionFamily& second,
                              double constant) {
  std::vector<double> a(functions.size()), b(functions.size());
  parallel::for_each_index(functions.size(), [&](std::size_t i) {
    a[i] = alpha_mod_norm(functions[i].f, spec, first).value;
    b[i] = alpha_mod_norm(functions[i].f, spec, second).value;
  });
  Report report("norm_equivalence");
  Table& t = report.add_table("ratios", {"index", "norm_first", "norm_second", "ratio"});
  double worst = 1.0;
  for (std::size_t i = 0; i < functions.size(); ++i) {
    const double r = a[i] / b[i];
    t.add_row({static_cast<double>(i), a[i], b[i], r});
    worst = std::max(worst, std::max(r, 1.0 / r));
  }
  report.set("constant", worst);
  report.check("constant", worst, "<=", constant);
  return report;
}

}  // namespace amod
