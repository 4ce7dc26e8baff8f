#pragma once

#include "amod/coverings/partition.hpp"
#include "amod/multipliers/symbol.hpp"
#include "amod/report.hpp"
#include "amod/spectral/norms.hpp"

namespace amod {

// Stability gate shared by the probes: growth of the sup from the inner half
// of the reach to the full reach, and the one-sided upper-half log–log slope.
struct GateTolerances {
  double growth = 0.10;
  double slope = 0.10;
};

// Spatial spread (max μ' - min μ')/2π of the kernel of η·e^{iμ} on `support`.
double phase_kernel_spread(const SymbolSpec& symbol, const Interval& support);

// r_k = ⟨k⟩^{-δ/(1-α)}·‖η_k e^{iμ}‖_{𝓕L¹} over the lattice (n = 1). Table
// "profile" (k, bracket, fl1, r_k, converged); scalars sup, sup_inner,
// growth, slope (of r_k) and trend_slope (of the unweighted fl1).
Report multiplier_fl1_profile(const SymbolSpec& symbol, double delta, const PartitionFamily& family,
                              const GateTolerances& tol = {}, const Fl1Options& options = {});

}  // namespace amod
