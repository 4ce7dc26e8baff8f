#include "amod/harness/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "amod/coverings/verify.hpp"
#include "amod/errors.hpp"
#include "amod/spaces/class_norms.hpp"
#include "amod/spectral/bracket.hpp"
#include "amod/spectral/fit.hpp"

namespace amod {

double phase_kernel_spread(const SymbolSpec& symbol, const Interval& support) {
  double lo = INFINITY, hi = -INFINITY;
  constexpr int kSamples = 64;
  for (int i = 0; i <= kSamples; ++i) {
    const double xi = support.lo + (support.hi - support.lo) * i / kSamples;
    const double d = symbol.derivative(xi);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return (hi - lo) / (2.0 * std::numbers::pi);
}

Report multiplier_fl1_profile(const SymbolSpec& symbol, double delta, const PartitionFamily& family,
                              const GateTolerances& tol, const Fl1Options& options) {
  if (symbol.kind() == SymbolKind::tabulated) {
    throw ConfigError("the FL1 criterion needs a C^2 preset symbol");
  }
  if (delta < 0.0) throw ConfigError("delta must be nonnegative");
  const double alpha = family.alpha();
  const ClassNormResult r = fm_class_norm(
      [&](double xi) { return std::polar(1.0, symbol.value(xi)); }, 0.0, family, options,
      [&](const Interval& s) { return phase_kernel_spread(symbol, s); });

  Report report("multiplier_fl1_profile");
  Table& t = report.add_table("profile", {"k", "bracket", "fl1", "r_k", "converged"});
  std::vector<double> scale, fl1, rk, centers;
  const double e = -delta / (1.0 - alpha);
  for (std::size_t i = 0; i < r.k.size(); ++i) {
    const int k = r.k[i];
    const double b = bracket(k);
    const double v = std::pow(b, e) * r.per_k[i];
    t.add_row({static_cast<double>(k), b, r.per_k[i], v, r.converged[i] ? 1.0 : 0.0});
    scale.push_back(b);
    fl1.push_back(r.per_k[i]);
    rk.push_back(v);
    centers.push_back(family.lattice().center(k));
    if (!r.converged[i]) report.flag("fl1 not converged for k = " + std::to_string(k));
  }
  const InnerOuterSup s = inner_outer_sup(centers, rk, family.lattice().xi_max());
  const double slope = upper_half_log_slope(scale, rk);
  report.set("alpha", alpha);
  report.set("delta", delta);
  report.set("xi_max", family.lattice().xi_max());
  report.set("sup", s.full);
  report.set("sup_inner", s.inner);
  report.set("growth", s.growth());
  report.set("slope", slope);
  report.set("trend_slope", upper_half_log_slope(scale, fl1));
  report.set("trend_bound", delta / (1.0 - alpha));
  report.check("growth", s.growth(), "<", tol.growth);
  report.check("slope", slope, "<", tol.slope);
  return report;
}

}  // namespace amod
