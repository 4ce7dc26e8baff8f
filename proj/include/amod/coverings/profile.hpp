#pragma once

namespace amod {

// Smooth step S(t) = h(t) / (h(t) + h(1-t)) with h(t) = e^{-1/t} for t > 0 and
// h = 0 otherwise. S = 0 on t <= 0, S = 1 on t >= 1, and S(t) + S(1-t) = 1.
double smoothstep(double t);
double smoothstep_derivative(double t);
// log S(t), finite on (0, ∞) where S itself may underflow; -∞ for t <= 0.
double log_smoothstep(double t);

// Radial plateau profile g: g(u) = 1 for |u| <= inner, 0 for |u| >= outer,
// smooth in between. Radii are in index units for α-windows.
struct Profile {
  double inner = 0.45;
  double outer = 0.55;

  // Throws ConfigError unless 0 < inner < outer.
  void validate() const;
  double operator()(double u) const;
  double derivative(double u) const;
  // log g(u); -∞ outside the open support.
  double log_value(double u) const;
};

// Plateau cutoff equal to 1 on |ξ| <= radius and supported in |ξ| <= 2·radius.
struct Cutoff {
  double radius = 1.0;
  double operator()(double xi) const;
};

}  // namespace amod
