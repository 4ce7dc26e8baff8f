#pragma once

#include <optional>

#include "amod/coverings/partition.hpp"
#include "amod/multipliers/symbol.hpp"
#include "amod/spectral/norms.hpp"

namespace amod {

// Localized phase of e^{iμ} on the window pair (k, l):
//   μ_k(ξ) = μ(⟨k⟩^{-δ/(1-α)²} ξ),   μ_{k,l}(ξ) = μ_k(⟨l⟩^a ξ + ⟨l⟩^a l),
//   ψ_{k,l}(ξ) = μ_{k,l}(ξ) - μ_{k,l}(0) - μ'_{k,l}(0) ξ,
//   φ_{k,l}(ξ) = η*(ξ) ξ² ∫₀¹ μ''_{k,l}(τξ) η*(τξ) (1-τ) dτ,
// with η* ≡ 1 on B(0, c), supported in B(0, 2c), c the rescaled support
// radius of the partition. φ_{k,l} = ψ_{k,l} on B(0, c).
class PhaseRemainder {
 public:
  PhaseRemainder(const SymbolSpec& symbol, int k, int l, double delta, const PartitionFamily& family);

  double psi(double xi) const;
  double phi(double xi) const;
  double cutoff(double xi) const;
  double cutoff_radius() const { return c_; }
  // Second derivative of μ_{k,l}.
  double local_second_derivative(double xi) const;

 private:
  double local(double xi) const;

  const SymbolSpec* symbol_;
  double dilation_;  // ⟨k⟩^{δ/(1-α)²}
  double scale_;     // ⟨l⟩^a
  double shift_;     // ⟨l⟩^a l
  double c_;
  double mu0_;
  double dmu0_;
};

struct PhaseRemainderResult {
  int k = 0;
  int l = 0;
  double psi_fl1 = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool converged = true;
  double psi_at_zero = 0.0;
  // Central-difference ψ'(0).
  double gradient_at_zero = 0.0;
  // max |φ - ψ| sampled on B(0, c).
  double cutoff_mismatch = 0.0;
};

// sup_k of the 𝓕M^{1,∞}_{2α-2δ,α} class norm of μ''; the rhs of the bound
// with constant C = 1.
double phase_remainder_rhs(const SymbolSpec& symbol, double delta, const PartitionFamily& family,
                           const Fl1Options& options = {});

// ‖φ_{k,l}‖_{𝓕L¹} and ratio psi_fl1 / rhs (0 when both vanish). `rhs` may be
// passed in to share it across a sweep. Throws ConfigError for tabulated
// symbols (C² cannot be certified).
PhaseRemainderResult phase_remainder_fl1(const SymbolSpec& symbol, int k, int l, double delta,
                                         const PartitionFamily& family,
                                         std::optional<double> rhs = std::nullopt,
                                         const Fl1Options& options = {});

}  // namespace amod
