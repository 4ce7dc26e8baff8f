#pragma once

#include <cstddef>
#include <span>

#include "amod/spectral/sampled_function.hpp"

namespace amod {

// Riemann-sum approximation of  𝓕f(ξ) = ∫ f(x) e^{-2πi x·ξ} dx  on the torus,
//   𝓕f(ξ_m) = Δx^n Σ_j f(x_j) e^{-2πi x_j·ξ_m},
// returned DC-centered on the dual grid. Throws ConfigError unless f is
// spatial-side.
SampledFunction fourier_forward(const SampledFunction& f);

// Riemann-sum approximation of  𝓕⁻¹g(x) = ∫ g(ξ) e^{2πi x·ξ} dξ. Exact inverse
// of fourier_forward up to roundoff. Throws ConfigError unless g is
// frequency-side.
SampledFunction fourier_inverse(const SampledFunction& g);

namespace detail {

// In-place unnormalized DFT over a row-major array of `samples`^`dim` points:
//   out_k = Σ_j in_j e^{sign·2πi j·k/N},  sign ∈ {-1, +1}.
// Wrap-around (not centered) ordering on both sides. Thread-safe.
void dft_in_place(std::span<Complex> data, int dim, std::size_t samples, int sign);

}  // namespace detail

}  // namespace amod
