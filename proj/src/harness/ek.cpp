#include "amod/harness/ek.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "amod/errors.hpp"
#include "amod/spectral/bracket.hpp"
#include "amod/spectral/fit.hpp"
#include "amod/spectral/parallel.hpp"

namespace amod {

namespace {

template <class F>
double edge(F&& positive, double inside, double direction, double scale) {
  // Walk out until the function vanishes, then bisect the last bracket.
  double step = scale;
  double out = inside + direction * step;
  while (positive(out)) {
    inside = out;
    step *= 2.0;
    out = inside + direction * step;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (inside + out);
    if (mid == inside || mid == out) break;
    if (positive(mid)) inside = mid; else out = mid;
  }
  return inside;
}

}  // namespace

EkGeometry ek_index_set(int k, double delta, const PartitionFamily& family) {
  const AlphaLattice& lat = family.lattice();
  EkGeometry g;
  g.k = k;
  g.delta = delta;
  g.alpha = lat.alpha();
  const double one_minus = 1.0 - g.alpha;
  g.dilation = std::pow(bracket(k), delta / (one_minus * one_minus));
  const double D = g.dilation;
  const Interval sk = family.support(k);
  const Interval dk{D * sk.lo, D * sk.hi};
  const double covered = family.covered_radius();
  if (std::max(std::abs(dk.lo), std::abs(dk.hi)) > covered) {
    throw PreconditionError("dilated window of k = " + std::to_string(k) + " reaches |xi| = " +
                            std::to_string(std::max(std::abs(dk.lo), std::abs(dk.hi))) +
                            " beyond the covered radius " + std::to_string(covered) +
                            "; increase Xi_max");
  }

  for (int l : lat.indices()) {
    const Interval sl = family.support(l);
    if (sl.lo < dk.hi && dk.lo < sl.hi) g.members.push_back(l);
  }

  // Definitional test from window evaluations only; the log domain keeps
  // values that underflow in double (e^{-1/t} tails) visible.
  auto dilated = [&](double xi) { return family.log_window(k, xi / D); };
  const double ck = lat.center(k);
  const double rk = lat.radius(k);
  auto pos_k = [&](double xi) { return dilated(xi) > -INFINITY; };
  const double lo_k = edge(pos_k, D * ck, -1.0, 1e-3 * D * rk);
  const double hi_k = edge(pos_k, D * ck, 1.0, 1e-3 * D * rk);
  const int first = static_cast<int>(std::floor(lat.kappa(lo_k))) - 3;
  const int last = static_cast<int>(std::ceil(lat.kappa(hi_k))) + 3;
  for (int l = std::max(first, -lat.max_index()); l <= std::min(last, lat.max_index()); ++l) {
    auto pos_l = [&](double xi) { return family.log_window(l, xi) > -INFINITY; };
    const double cl = lat.center(l);
    const double rl = lat.radius(l);
    const double lo_l = edge(pos_l, cl, -1.0, 1e-3 * rl);
    const double hi_l = edge(pos_l, cl, 1.0, 1e-3 * rl);
    const double a = std::max(lo_l, lo_k);
    const double b = std::min(hi_l, hi_k);
    if (a > b) continue;
    const double mid = 0.5 * (a + b);
    if (family.log_window(l, mid) + dilated(mid) > -INFINITY) g.definitional_members.push_back(l);
  }
  g.enumeration_match = g.members == g.definitional_members;
  g.count = g.members.size();

  const double target = std::pow(bracket(k), 1.0 + delta / one_minus);
  g.bracket_ratio_min = INFINITY;
  for (int l : g.members) {
    const double r = bracket(l) / target;
    g.bracket_ratio_min = std::min(g.bracket_ratio_min, r);
    g.bracket_ratio_max = std::max(g.bracket_ratio_max, r);
    g.distance_max = std::max(g.distance_max, std::abs(ck - lat.center(l) / D) / rk);
  }
  return g;
}

Report ek_sweep(const std::vector<int>& ks, double delta, const PartitionFamily& family,
                const EkTolerances& tol) {
  std::vector<EkGeometry> geo(ks.size());
  parallel::for_each_index(ks.size(), [&](std::size_t i) { geo[i] = ek_index_set(ks[i], delta, family); });

  Report report("ek_geometry");
  Table& t = report.add_table("ek", {"k", "bracket", "count", "definitional_count", "match",
                                     "bracket_ratio_min", "bracket_ratio_max", "distance_max"});
  std::vector<double> scale, count;
  bool match = true;
  double c_band = 1.0, dist = 0.0;
  for (const auto& g : geo) {
    t.add_row({static_cast<double>(g.k), bracket(g.k), static_cast<double>(g.count),
               static_cast<double>(g.definitional_members.size()), g.enumeration_match ? 1.0 : 0.0,
               g.bracket_ratio_min, g.bracket_ratio_max, g.distance_max});
    match = match && g.enumeration_match && g.count > 0;
    c_band = std::max({c_band, g.bracket_ratio_max, 1.0 / g.bracket_ratio_min});
    dist = std::max(dist, g.distance_max);
    scale.push_back(bracket(g.k));
    count.push_back(static_cast<double>(g.count));
  }
  const double expected = delta / (1.0 - family.alpha());
  const double slope = upper_half_log_slope(scale, count);
  report.set("alpha", family.alpha());
  report.set("delta", delta);
  report.set("slope", slope);
  report.set("expected_slope", expected);
  report.set("bracket_constant", c_band);
  report.set("distance_max", dist);
  report.require("enumeration_match", match);
  report.check("bracket_constant", c_band, "<", tol.bracket_constant);
  report.check("slope_error", std::abs(slope - expected), "<=",
               expected == 0.0 ? tol.slope_relative : tol.slope_relative * expected);
  return report;
}

std::vector<int> gamma_neighbors(int k, const PartitionFamily& family) {
  return family.overlap_neighbors(k);
}

Report gamma_sweep(const PartitionFamily& family, int limit) {
  Report report("gamma_neighbors");
  Table& t = report.add_table("gamma", {"k", "count"});
  int worst = 0;
  for (int k : family.lattice().indices()) {
    const int c = static_cast<int>(gamma_neighbors(k, family).size());
    t.add_row({static_cast<double>(k), static_cast<double>(c)});
    worst = std::max(worst, c);
  }
  report.set("max_count", worst);
  report.check("max_count", worst, "<=", limit);
  return report;
}

}  // namespace amod
