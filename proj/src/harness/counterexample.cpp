#include "amod/harness/counterexample.hpp"

#include <algorithm>
#include <cmath>

#include "amod/coverings/verify.hpp"
#include "amod/errors.hpp"
#include "amod/spaces/class_norms.hpp"
#include "amod/spectral/bracket.hpp"

namespace amod {

double CompactBump::value(double u) const {
  const double s = u / radius;
  if (std::abs(s) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

double CompactBump::derivative(double u) const {
  const double s = u / radius;
  if (std::abs(s) >= 1.0) return 0.0;
  const double d = 1.0 - s * s;
  return value(u) * (-2.0 * s / (d * d)) / radius;
}

double CompactBump::steepest_point() const {
  // |h'| is unimodal on (0, r); golden-section search.
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 0.0, b = radius;
  double c = b - g * (b - a), d = a + g * (b - a);
  for (int it = 0; it < 200 && b - a > 1e-15 * radius; ++it) {
    if (std::abs(derivative(c)) > std::abs(derivative(d))) {
      b = d;
    } else {
      a = c;
    }
    c = b - g * (b - a);
    d = a + g * (b - a);
  }
  return 0.5 * (a + b);
}

double CompactBump::max_slope() const { return std::abs(derivative(steepest_point())); }

BumpTrain::BumpTrain(CompactBump bump, const AlphaLattice& lattice)
    : bump_(bump), lattice_(&lattice) {}

double BumpTrain::value(double xi) const {
  const long k = std::lround(lattice_->kappa(xi));
  double sum = 0.0;
  for (long l = k - 1; l <= k + 1; ++l) sum += bump_.value(xi - lattice_->center(static_cast<double>(l)));
  return sum;
}

double BumpTrain::derivative(double xi) const {
  const long k = std::lround(lattice_->kappa(xi));
  double sum = 0.0;
  for (long l = k - 1; l <= k + 1; ++l) {
    sum += bump_.derivative(xi - lattice_->center(static_cast<double>(l)));
  }
  return sum;
}

Report counterexample_h(const CompactBump& bump, const PartitionFamily& family,
                        const CounterexampleTolerances& tol, const Fl1Options& options) {
  const AlphaLattice& lat = family.lattice();
  const double gap = lat.center(1) - lat.center(0);
  if (!(bump.radius > 0.0) || bump.radius >= 0.5 * gap) {
    throw PreconditionError("bump radius " + format_number(bump.radius) +
                            " must be below half the minimal center gap " + format_number(0.5 * gap));
  }
  const BumpTrain H(bump, lat);

  // (a) membership side.
  const ClassNormResult fm = fm_class_norm(
      [&](double xi) { return Complex(H.value(xi)); }, 0.0, family, options,
      [&](const Interval&) { return 16.0 / bump.radius; });
  std::vector<double> centers;
  for (int k : fm.k) centers.push_back(lat.center(k));
  const InnerOuterSup s = inner_outer_sup(centers, fm.per_k, lat.xi_max());

  // (b) non-membership side.
  const double u_star = bump.steepest_point();
  const double h_slope = bump.max_slope();
  double slope_dev = 0.0;
  std::vector<double> points;
  Report report("counterexample_h");
  Table& t = report.add_table("centers", {"k", "center", "fl1", "max_abs_dH"});
  for (std::size_t i = 0; i < fm.k.size(); ++i) {
    const int k = fm.k[i];
    const double ck = lat.center(k);
    double m = 0.0;
    constexpr int kScan = 2000;
    for (int j = -kScan; j <= kScan; ++j) m = std::max(m, std::abs(H.derivative(ck + bump.radius * j / kScan)));
    m = std::max(m, std::abs(H.derivative(ck + u_star)));
    m = std::max(m, std::abs(H.derivative(ck - u_star)));
    slope_dev = std::max(slope_dev, std::abs(m - h_slope) / h_slope);
    t.add_row({static_cast<double>(k), ck, fm.per_k[i], m});
    if (k > 0) points.push_back(ck + u_star);
    if (!fm.converged[i]) report.flag("fl1 not converged for k = " + std::to_string(k));
  }
  const Report mikhlin = mikhlin_class_check(
      {[&](double xi) { return H.value(xi); }, [&](double xi) { return H.derivative(xi); }}, 0.0,
      points);
  const bool member = mikhlin.scalar("member") != 0.0;

  report.set("alpha", lat.alpha());
  report.set("bump_radius", bump.radius);
  report.set("fm_sup", s.full);
  report.set("fm_sup_inner", s.inner);
  report.set("fm_drift", std::abs(s.growth()));
  report.set("max_dh", h_slope);
  report.set("dH_deviation", slope_dev);
  report.set("mikhlin_slope", mikhlin.scalar("slope1"));
  report.set("in_N0", member ? 1.0 : 0.0);
  report.check("fm_drift", std::abs(s.growth()), "<", tol.fm_drift);
  report.check("dH_deviation", slope_dev, "<", 1e-9);
  report.require("not_in_N0", !member);
  report.absorb(mikhlin, "mikhlin");
  return report;
}

}  // namespace amod
