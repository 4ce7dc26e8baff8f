#include "amod/spaces/class_norms.hpp"

#include <algorithm>
#include <cmath>

#include "amod/coverings/verify.hpp"
#include "amod/spectral/bracket.hpp"
#include "amod/spectral/fit.hpp"
#include "amod/spectral/parallel.hpp"

namespace amod {

bool ClassNormResult::all_converged() const {
  return std::all_of(converged.begin(), converged.end(), [](bool b) { return b; });
}

ClassNormResult fm_class_norm(const std::function<Complex(double)>& g, double w,
                              const PartitionFamily& family, const Fl1Options& options,
                              const KernelSpread& spread) {
  const AlphaLattice& lat = family.lattice();
  const auto& ks = lat.indices();
  ClassNormResult r;
  r.k = ks;
  r.per_k.resize(ks.size());
  r.converged.resize(ks.size());
  std::vector<char> ok(ks.size());
  parallel::for_each_index(ks.size(), [&](std::size_t idx) {
    const int k = ks[idx];
    const Interval s = family.support(k);
    Fl1Options o = window_fl1_options(options, lat.radius(k));
    if (spread) o.spatial_period = std::max(o.spatial_period, 4.0 * spread(s));
    const SpectralFunction h{[&, k](double xi) {
                               const double e = family.window(k, xi);
                               return e == 0.0 ? Complex(0.0) : e * g(xi);
                             },
                             s.lo, s.hi};
    const Fl1Result f = fl1_norm(h, o);
    r.per_k[idx] = std::pow(bracket(k), w / (1.0 - lat.alpha())) * f.value;
    ok[idx] = f.converged.value_or(true);
  });
  std::vector<double> scale;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    r.converged[i] = ok[i] != 0;
    r.sup = std::max(r.sup, r.per_k[i]);
    scale.push_back(bracket(ks[i]));
  }
  r.fitted_slope = upper_half_log_slope(scale, r.per_k);
  return r;
}

Report mikhlin_class_check(const MikhlinInput& g, double w, const std::vector<double>& points,
                           double slope_tolerance) {
  Report report("mikhlin_class");
  Table& t = report.add_table("points", {"xi", "bracket", "f0", "f1"});
  std::vector<double> scale, f0s, f1s;
  double sup0 = 0.0, sup1 = 0.0;
  for (double xi : points) {
    const double b = bracket(xi);
    const double bw = std::pow(b, w);
    const double v = g.value(xi);
    double d;
    if (g.derivative) {
      d = g.derivative(xi);
    } else {
      const double h = 1e-5 * b;
      d = (g.value(xi + h) - g.value(xi - h)) / (2.0 * h);
    }
    // ∂(⟨ξ⟩^w g) = w⟨ξ⟩^{w-2}ξ g + ⟨ξ⟩^w g'
    const double f0 = std::abs(bw * v);
    const double f1 = std::abs(w * bw / (b * b) * xi * v + bw * d) * b;
    if (!std::isfinite(f0) || !std::isfinite(f1)) {
      report.flag("derivative evaluation failed at xi = " + format_number(xi));
      continue;
    }
    t.add_row({xi, b, f0, f1});
    scale.push_back(b);
    f0s.push_back(f0);
    f1s.push_back(f1);
    sup0 = std::max(sup0, f0);
    sup1 = std::max(sup1, f1);
  }
  const double slope0 = upper_half_log_slope(scale, f0s);
  const double slope1 = upper_half_log_slope(scale, f1s);
  report.set("weight", w);
  report.set("sup0", sup0);
  report.set("sup1", sup1);
  report.set("slope0", slope0);
  report.set("slope1", slope1);
  report.set("member", slope0 < slope_tolerance && slope1 < slope_tolerance ? 1.0 : 0.0);
  return report;
}

}  // namespace amod
