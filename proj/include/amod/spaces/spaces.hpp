#pragma once

#include <span>
#include <vector>

#include "amod/coverings/dyadic.hpp"
#include "amod/coverings/partition.hpp"
#include "amod/spectral/exponent.hpp"
#include "amod/spectral/sampled_function.hpp"

namespace amod {

// (p, q, s, α) of M^{p,q}_{s,α}; α = 1 denotes the Besov space B^{p,q}_s.
struct SpaceSpec {
  Exponent p{2.0};
  Exponent q{2.0};
  double s = 0.0;
  double alpha = 0.0;
};

inline constexpr double kLeakageTolerance = 1e-10;

// Fraction of spectral energy Σ|f̂|² at |ξ| > radius (0 for the zero function).
double spectral_leakage(const SampledFunction& spectrum, double radius);

// 𝓕⁻¹(window · 𝓕f). `window` is dense on the frequency grid dual to f's.
SampledFunction box_op(const SampledFunction& f, std::span<const double> window);
SampledFunction box_op(const SampledFunction& f, const PartitionFamily& family, int k);

// Per-box data of a decomposition norm, in lattice (or shell) order.
struct NormResult {
  double value = 0.0;
  std::vector<int> index;
  std::vector<double> weight;
  std::vector<double> box_norm;
  double leakage = 0.0;
};

// (Σ_k ⟨k⟩^{sq/(1-α)} ‖Box_k f‖_p^q)^{1/q}, max over k for q = ∞.
// Throws ConfigError on grid or α mismatch (α = 1 must use besov_norm) and
// PreconditionError when the spectral leakage outside the certified region
// exceeds `leakage_tolerance`.
NormResult alpha_mod_norm(const SampledFunction& f, const SpaceSpec& spec,
                          const PartitionFamily& family,
                          double leakage_tolerance = kLeakageTolerance);

// (Σ_j 2^{jsq} ‖Δ_j f‖_p^q)^{1/q} over the shells of `family`.
NormResult besov_norm(const SampledFunction& f, Exponent p, Exponent q, double s,
                      const DyadicFamily& family, double leakage_tolerance = kLeakageTolerance);

// ℓ^q combination of weight·box_norm in the given order.
double lq_combine(std::span<const double> weight, std::span<const double> box_norm, Exponent q);

}  // namespace amod
