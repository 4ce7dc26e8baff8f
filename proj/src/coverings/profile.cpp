#include "amod/coverings/profile.hpp"

#include <cmath>

#include "amod/errors.hpp"

namespace amod {

double smoothstep(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  // h(t)/(h(t)+h(1-t)) = 1 / (1 + e^{1/t - 1/(1-t)}); overflow gives 0.
  return 1.0 / (1.0 + std::exp(1.0 / t - 1.0 / (1.0 - t)));
}

double smoothstep_derivative(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const double z = 1.0 / t - 1.0 / (1.0 - t);
  if (std::abs(z) > 700.0) return 0.0;
  const double e = std::exp(z);
  const double s = 1.0 / (1.0 + e);
  // dS/dt = S(1-S)·(1/t² + 1/(1-t)²)
  return s * (1.0 - s) * (1.0 / (t * t) + 1.0 / ((1.0 - t) * (1.0 - t)));
}

double log_smoothstep(double t) {
  if (t <= 0.0) return -INFINITY;
  if (t >= 1.0) return 0.0;
  const double z = 1.0 / t - 1.0 / (1.0 - t);
  // log S = -log(1 + e^z)
  return z > 30.0 ? -z - std::log1p(std::exp(-z)) : -std::log1p(std::exp(z));
}

void Profile::validate() const {
  if (!(inner > 0.0) || !(outer > inner) || !std::isfinite(outer)) {
    throw ConfigError("profile radii must satisfy 0 < r1 < r2 (got r1=" + std::to_string(inner) +
                      ", r2=" + std::to_string(outer) + ")");
  }
}

// 1 - S(t) is evaluated as S(1 - t) so the tail stays positive up to underflow.
double Profile::operator()(double u) const {
  return smoothstep(1.0 - (std::abs(u) - inner) / (outer - inner));
}

double Profile::log_value(double u) const {
  return log_smoothstep(1.0 - (std::abs(u) - inner) / (outer - inner));
}

double Profile::derivative(double u) const {
  const double w = outer - inner;
  const double d = -smoothstep_derivative((std::abs(u) - inner) / w) / w;
  return u < 0.0 ? -d : d;
}

double Cutoff::operator()(double xi) const {
  return smoothstep(2.0 - std::abs(xi) / radius);
}

}  // namespace amod
