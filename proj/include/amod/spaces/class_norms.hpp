#pragma once

#include <functional>
#include <vector>

#include "amod/coverings/partition.hpp"
#include "amod/report.hpp"
#include "amod/spectral/norms.hpp"

namespace amod {

struct ClassNormResult {
  std::vector<int> k;
  // ⟨k⟩^{w/(1-α)}·‖η_k g‖_{𝓕L¹}
  std::vector<double> per_k;
  std::vector<bool> converged;
  double sup = 0.0;
  // Slope of log per_k against log⟨k⟩ over the upper half of the range.
  double fitted_slope = 0.0;
  bool all_converged() const;
};

// Spatial extent of the kernel of η_k·g on the window support, used to pick
// the initial 𝓕L¹ period (e.g. the spread of μ'/2π for g = e^{iμ}).
using KernelSpread = std::function<double(const Interval& support)>;

ClassNormResult fm_class_norm(const std::function<Complex(double)>& g, double w,
                              const PartitionFamily& family, const Fl1Options& options = {},
                              const KernelSpread& spread = {});

// Functional |∂^ρ(⟨ξ⟩^w g)|·⟨ξ⟩^{|ρ|}, ρ <= 1 (n = 1), evaluated pointwise.
// `derivative` may be empty, in which case a central difference is used.
struct MikhlinInput {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

// Table "points" (xi, bracket, f0, f1); scalars sup0, sup1, slope0, slope1
// and member (1 when both tail slopes are below `slope_tolerance`).
Report mikhlin_class_check(const MikhlinInput& g, double w, const std::vector<double>& points,
                           double slope_tolerance = 0.1);

}  // namespace amod
