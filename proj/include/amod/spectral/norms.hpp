#pragma once

#include <functional>
#include <optional>

#include "amod/spectral/exponent.hpp"
#include "amod/spectral/sampled_function.hpp"

namespace amod {

// (cell · Σ_j |f_j|^p)^{1/p}, or max_j |f_j| for p = ∞. The cell volume is the
// grid step of the function's own side raised to n.
double lp_norm(const SampledFunction& f, Exponent p);

// A frequency-side function on R (n = 1) known by evaluation, vanishing
// outside [lo, hi].
struct SpectralFunction {
  std::function<Complex(double)> eval;
  double lo = 0.0;
  double hi = 0.0;
};

struct Fl1Options {
  // Initial spatial period P; the frequency sampling step is 1/P.
  double spatial_period = 64.0;
  // Spatial samples per unit of support bandwidth.
  int oversample = 8;
  // Relative change between successive period doublings that counts as
  // converged.
  double tolerance = 1e-3;
  int max_doublings = 4;
};

struct Fl1Result {
  double value = 0.0;
  // Unset when no convergence check was run.
  std::optional<bool> converged;
  // Period of the accepted evaluation.
  double spatial_period = 0.0;
  double relative_change = 0.0;
};

// ‖g‖_{𝓕L¹} = ‖𝓕⁻¹g‖_{L¹} of a sampled frequency-side function, computed once
// on its own torus (spatial period L). `converged` is left unset.
Fl1Result fl1_norm(const SampledFunction& g);

// ‖g‖_{𝓕L¹} for an evaluable compactly supported g. The L¹ integral is taken
// over one spatial period P; P is doubled until the relative change drops
// below options.tolerance or options.max_doublings is exhausted, in which case
// the last value is reported with converged = false.
Fl1Result fl1_norm(const SpectralFunction& g, const Fl1Options& options = {});

// Single evaluation at a fixed period (no convergence loop).
double fl1_norm_at_period(const SpectralFunction& g, double spatial_period, int oversample);

}  // namespace amod
