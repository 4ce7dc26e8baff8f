#include "amod/coverings/lattice.hpp"

#include <cmath>
#include <string>

#include "amod/errors.hpp"
#include "amod/spectral/bracket.hpp"

namespace amod {

double alpha_exponent(double alpha) { return alpha / (1.0 - alpha); }

double center_map(double a, double t) {
  if (a == 0.0) return t;
  return std::pow(bracket(t), a) * t;
}

double center_map_derivative(double a, double t) {
  if (a == 0.0) return 1.0;
  const double b2 = 1.0 + t * t;
  return std::pow(b2, 0.5 * a - 1.0) * (1.0 + (1.0 + a) * t * t);
}

double index_coordinate(double a, double xi) {
  if (a == 0.0 || xi == 0.0) return xi;
  const double y = std::abs(xi);
  // c(t) >= t, and c(t) >= t^{1+a} for t >= 1, so the root lies in [0, hi].
  double lo = 0.0;
  double hi = y < 1.0 ? y : std::min(y, std::max(1.0, std::pow(y, 1.0 / (1.0 + a))));
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = center_map(a, t) - y;
    if (f == 0.0) break;
    if (f < 0.0) lo = t; else hi = t;
    double next = t - f / center_map_derivative(a, t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 4e-16 * std::max(1.0, t)) {
      t = next;
      break;
    }
    t = next;
  }
  return xi < 0.0 ? -t : t;
}

AlphaLattice::AlphaLattice(double alpha, int dim, double xi_max)
    : alpha_(alpha), dim_(dim), xi_max_(xi_max) {
  if (alpha == 1.0) {
    throw ConfigError("alpha = 1 is the dyadic decomposition; use build_dyadic_partition");
  }
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw ConfigError("alpha must lie in [0, 1), got " + std::to_string(alpha));
  }
  if (dim != 1) throw ConfigError("alpha lattices are implemented for n = 1 only");
  if (!(xi_max > 0.0) || !std::isfinite(xi_max)) {
    throw ConfigError("Xi_max must be positive and finite");
  }
  a_ = alpha_exponent(alpha);
  int k = 0;
  while (center(k + 1) <= xi_max_) ++k;
  max_index_ = k;
  for (int i = -k; i <= k; ++i) indices_.push_back(i);
}

double AlphaLattice::radius(double k) const {
  return a_ == 0.0 ? 1.0 : std::pow(bracket(k), a_);
}

}  // namespace amod
