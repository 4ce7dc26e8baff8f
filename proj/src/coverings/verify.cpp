#include "amod/coverings/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "amod/errors.hpp"
#include "amod/spectral/bracket.hpp"
#include "amod/spectral/parallel.hpp"

namespace amod {

double InnerOuterSup::growth() const {
  if (inner == 0.0) return full == 0.0 ? 0.0 : INFINITY;
  return full / inner - 1.0;
}

InnerOuterSup inner_outer_sup(const std::vector<double>& centers, const std::vector<double>& value,
                              double xi_max) {
  InnerOuterSup s;
  for (std::size_t i = 0; i < value.size(); ++i) {
    s.full = std::max(s.full, value[i]);
    if (std::abs(centers[i]) <= 0.5 * xi_max) s.inner = std::max(s.inner, value[i]);
  }
  return s;
}

Fl1Options window_fl1_options(const Fl1Options& base, double radius) {
  Fl1Options o = base;
  o.spatial_period = base.spatial_period / radius;
  return o;
}

namespace {

struct WindowRow {
  double fl1 = 0.0;
  bool converged = true;
  double sum_dev = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  bool support_ok = true;
  bool plateau_ok = true;
  double peak = 0.0;
};

}  // namespace

Report verify_partition(const PartitionFamily& family, const PartitionTolerances& tol,
                        const Fl1Options& fl1) {
  const Grid& grid = family.grid();
  const AlphaLattice& lat = family.lattice();
  const double step = grid.frequency_step();
  const double need = kMinSamplesPerRadius * step;
  for (int k : lat.indices()) {
    if (lat.radius(k) < need) {
      throw PreconditionError("grid too coarse: radius(" + std::to_string(k) + ")/dxi = " +
                              std::to_string(lat.radius(k) / step) + " < 8; need L >= " +
                              std::to_string(kMinSamplesPerRadius / lat.radius(k)));
    }
  }

  const std::size_t n = grid.samples();
  const long half = static_cast<long>(n / 2);
  const double covered = family.grid_covered_radius();

  // Σ_k η_k on the grid, accumulated in k order.
  std::vector<double> total(n, 0.0);
  for (const auto& p : family.patches()) {
    for (std::size_t j = 0; j < p.values.size(); ++j) total[p.first + j] += p.values[j];
  }
  double sum_dev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(grid.coordinate(i)) <= covered) {
      sum_dev = std::max(sum_dev, std::abs(total[i] - 1.0));
    }
  }

  const double c1 = family.plateau_radius_c1();
  const auto& ks = lat.indices();
  std::vector<WindowRow> rows(ks.size());
  parallel::for_each_index(ks.size(), [&](std::size_t idx) {
    const int k = ks[idx];
    const WindowPatch& p = family.patch(k);
    const double ck = lat.center(k);
    const double rk = lat.radius(k);
    WindowRow r;

    auto value = [&](long i) -> double {
      const long j = i - static_cast<long>(p.first);
      if (j < 0 || j >= static_cast<long>(p.values.size())) return 0.0;
      return p.values[static_cast<std::size_t>(j)];
    };
    const long first = static_cast<long>(p.first);
    const long last = first + static_cast<long>(p.values.size()) - 1;
    for (long i = std::max(first - 1, 1L); i <= std::min(last + 1, static_cast<long>(n) - 2); ++i) {
      const double a = value(i - 1), b = value(i), c = value(i + 1);
      r.d1 = std::max(r.d1, std::abs(c - a) / (2.0 * step) * rk);
      r.d2 = std::max(r.d2, std::abs(c - 2.0 * b + a) / (step * step) * rk * rk);
    }
    for (std::size_t j = 0; j < p.values.size(); ++j) {
      const double v = p.values[j];
      const double xi = grid.coordinate(p.first + j);
      r.peak = std::max(r.peak, v);
      if (!(v >= 0.0 && v <= 1.0)) r.support_ok = false;
      if (std::abs(xi) <= covered) r.sum_dev = std::max(r.sum_dev, std::abs(total[p.first + j] - 1.0));
      if (std::abs(xi - ck) < c1 * rk && v != 1.0) r.plateau_ok = false;
    }

    // Exact zeros just outside the support interval and nothing beyond the
    // rescaled support radius c.
    const Interval s = family.support(k);
    const double band = 4.0 * rk;
    const long m_lo = std::max(static_cast<long>(std::floor((s.lo - band) / step)), -half);
    const long m_hi = std::min(static_cast<long>(std::ceil((s.hi + band) / step)), half - 1);
    for (long m = m_lo; m <= m_hi; ++m) {
      const double xi = m * step;
      if (s.contains(xi)) continue;
      if (family.window(k, xi) != 0.0) r.support_ok = false;
    }
    if (s.lo < ck - family.support_radius_c() * rk * (1 + 1e-12) ||
        s.hi > ck + family.support_radius_c() * rk * (1 + 1e-12)) {
      r.support_ok = false;
    }

    const SpectralFunction g{[&family, k](double xi) { return Complex(family.window(k, xi)); },
                             s.lo, s.hi};
    const Fl1Result f = fl1_norm(g, window_fl1_options(fl1, rk));
    r.fl1 = f.value;
    r.converged = f.converged.value_or(true);
    rows[idx] = r;
  });

  Report report("partition_verify");
  Table& t = report.add_table("windows", {"k", "bracket", "center", "radius", "fl1", "sum_dev",
                                          "d1_const", "d2_const", "support_ok", "plateau_ok",
                                          "fl1_converged"});
  std::vector<double> centers, fl1s, d1s, d2s;
  bool support_ok = true, plateau_ok = true, dominates = true;
  double fl1_min = INFINITY;
  for (std::size_t idx = 0; idx < ks.size(); ++idx) {
    const int k = ks[idx];
    const WindowRow& r = rows[idx];
    t.add_row({static_cast<double>(k), bracket(k), lat.center(k), lat.radius(k), r.fl1, r.sum_dev,
               r.d1, r.d2, r.support_ok ? 1.0 : 0.0, r.plateau_ok ? 1.0 : 0.0,
               r.converged ? 1.0 : 0.0});
    centers.push_back(lat.center(k));
    fl1s.push_back(r.fl1);
    d1s.push_back(r.d1);
    d2s.push_back(r.d2);
    fl1_min = std::min(fl1_min, r.fl1);
    support_ok = support_ok && r.support_ok;
    plateau_ok = plateau_ok && r.plateau_ok;
    // sup|g| <= ‖g‖_{𝓕L¹}, up to the quadrature tolerance.
    if (r.fl1 < r.peak * (1.0 - 2.0 * fl1.tolerance)) dominates = false;
    if (!r.converged) report.flag("fl1 not converged for k = " + std::to_string(k));
  }

  const InnerOuterSup fs = inner_outer_sup(centers, fl1s, lat.xi_max());
  const InnerOuterSup s1 = inner_outer_sup(centers, d1s, lat.xi_max());
  const InnerOuterSup s2 = inner_outer_sup(centers, d2s, lat.xi_max());

  report.set("alpha", lat.alpha());
  report.set("xi_max", lat.xi_max());
  report.set("window_count", static_cast<double>(ks.size()));
  report.set("covered_radius", family.covered_radius());
  report.set("grid_covered_radius", covered);
  report.set("support_radius_c", family.support_radius_c());
  report.set("plateau_radius_c1", c1);
  report.set("min_weight_sum", family.min_weight_sum());
  report.set("max_overlap", family.max_overlap());
  report.set("sum_deviation", sum_dev);
  report.set("fl1_sup", fs.full);
  report.set("fl1_min", fl1_min);
  report.set("fl1_ratio", fs.full / fl1_min);
  report.set("fl1_sup_drift", std::abs(fs.growth()));
  report.set("d1_sup", s1.full);
  report.set("d1_drift", s1.growth());
  report.set("d2_sup", s2.full);
  report.set("d2_drift", s2.growth());

  report.check("sum_deviation", sum_dev, "<", tol.sum_deviation);
  report.require("support_exact", support_ok);
  report.require("plateau_c1", plateau_ok && c1 > 0.0);
  report.check("d1_drift", s1.growth(), "<", tol.derivative_drift);
  report.check("d2_drift", s2.growth(), "<", tol.derivative_drift);
  report.check("fl1_ratio", fs.full / fl1_min, "<", tol.fl1_ratio);
  report.check("fl1_sup_drift", std::abs(fs.growth()), "<", tol.fl1_drift);
  report.require("fl1_dominates_sup", dominates);
  return report;
}

}  // namespace amod
