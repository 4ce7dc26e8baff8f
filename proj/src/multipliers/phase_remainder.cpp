#include "amod/multipliers/phase_remainder.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "amod/coverings/profile.hpp"
#include "amod/errors.hpp"
#include "amod/spaces/class_norms.hpp"
#include "amod/spectral/bracket.hpp"

namespace amod {

namespace {

constexpr int kNodes = 16;
constexpr int kPanels = 8;

struct GaussLegendre {
  std::array<double, kNodes> x{};
  std::array<double, kNodes> w{};
  GaussLegendre() {
    for (int i = 0; i < kNodes; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (kNodes + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = z;
        for (int n = 2; n <= kNodes; ++n) {
          const double p2 = ((2.0 * n - 1.0) * z * p1 - (n - 1.0) * p0) / n;
          p0 = p1;
          p1 = p2;
        }
        dp = kNodes * (z * p1 - p0) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[static_cast<std::size_t>(i)] = z;
      w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

const GaussLegendre& gauss_legendre() {
  static const GaussLegendre rule;
  return rule;
}

}  // namespace

PhaseRemainder::PhaseRemainder(const SymbolSpec& symbol, int k, int l, double delta,
                               const PartitionFamily& family)
    : symbol_(&symbol) {
  if (symbol.kind() == SymbolKind::tabulated) {
    throw ConfigError("phase remainders need a C^2 preset symbol; tabulated symbols are not certified");
  }
  const AlphaLattice& lat = family.lattice();
  const double alpha = lat.alpha();
  dilation_ = std::pow(bracket(k), delta / ((1.0 - alpha) * (1.0 - alpha)));
  scale_ = lat.radius(l);
  shift_ = lat.center(l);
  c_ = family.support_radius_c();
  mu0_ = local(0.0);
  dmu0_ = scale_ / dilation_ * symbol.derivative(shift_ / dilation_);
}

double PhaseRemainder::local(double xi) const {
  return symbol_->value((scale_ * xi + shift_) / dilation_);
}

double PhaseRemainder::local_second_derivative(double xi) const {
  const double r = scale_ / dilation_;
  return r * r * symbol_->second_derivative((scale_ * xi + shift_) / dilation_);
}

double PhaseRemainder::psi(double xi) const { return local(xi) - mu0_ - dmu0_ * xi; }

double PhaseRemainder::cutoff(double xi) const { return Cutoff{c_}(xi); }

double PhaseRemainder::phi(double xi) const {
  const double outer = cutoff(xi);
  if (outer == 0.0) return 0.0;
  const GaussLegendre& gl = gauss_legendre();
  double sum = 0.0;
  for (int p = 0; p < kPanels; ++p) {
    const double a = static_cast<double>(p) / kPanels;
    const double h = 1.0 / kPanels;
    for (int i = 0; i < kNodes; ++i) {
      const double tau = a + 0.5 * h * (gl.x[static_cast<std::size_t>(i)] + 1.0);
      const double z = tau * xi;
      sum += 0.5 * h * gl.w[static_cast<std::size_t>(i)] * local_second_derivative(z) * cutoff(z) *
             (1.0 - tau);
    }
  }
  return outer * xi * xi * sum;
}

double phase_remainder_rhs(const SymbolSpec& symbol, double delta, const PartitionFamily& family,
                           const Fl1Options& options) {
  const double alpha = family.alpha();
  const auto r = fm_class_norm([&](double xi) { return Complex(symbol.second_derivative(xi)); },
                               2.0 * alpha - 2.0 * delta, family, options);
  return r.sup;
}

PhaseRemainderResult phase_remainder_fl1(const SymbolSpec& symbol, int k, int l, double delta,
                                         const PartitionFamily& family, std::optional<double> rhs,
                                         const Fl1Options& options) {
  const PhaseRemainder rem(symbol, k, l, delta, family);
  PhaseRemainderResult r;
  r.k = k;
  r.l = l;
  const double c = rem.cutoff_radius();
  Fl1Options o = options;
  o.spatial_period = options.spatial_period / c;
  const Fl1Result f = fl1_norm(SpectralFunction{[&](double xi) { return Complex(rem.phi(xi)); },
                                                -2.0 * c, 2.0 * c},
                               o);
  r.psi_fl1 = f.value;
  r.converged = f.converged.value_or(true);
  r.rhs = rhs ? *rhs : phase_remainder_rhs(symbol, delta, family, options);
  r.ratio = r.psi_fl1 == 0.0 ? 0.0 : r.psi_fl1 / r.rhs;
  r.psi_at_zero = rem.psi(0.0);
  const double h = 1e-4;
  r.gradient_at_zero = (rem.psi(h) - rem.psi(-h)) / (2.0 * h);
  for (int i = -8; i <= 8; ++i) {
    const double xi = c * i / 8.0;
    r.cutoff_mismatch = std::max(r.cutoff_mismatch, std::abs(rem.phi(xi) - rem.psi(xi)));
  }
  return r;
}

}  // namespace amod
