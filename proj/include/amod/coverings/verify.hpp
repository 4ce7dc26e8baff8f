#pragma once

#include "amod/coverings/partition.hpp"
#include "amod/report.hpp"
#include "amod/spectral/norms.hpp"

namespace amod {

struct PartitionTolerances {
  double sum_deviation = 1e-8;
  // Growth of sup_k of the derivative constants from the inner half of the
  // lattice to the full lattice.
  double derivative_drift = 0.10;
  double fl1_ratio = 3.0;
  double fl1_drift = 0.01;
};

// Smallest radius(k)/Δξ accepted by verify_partition.
inline constexpr double kMinSamplesPerRadius = 8.0;

// Certifies the partition conditions on the sampled grid: partition of unity
// on the covered region, exact support, plateau η_k = 1 on B(c_k, C₁⟨k⟩^a),
// derivative scaling |∂^γ η_k|·⟨k⟩^{a|γ|} (γ <= 2, central differences), and
// the uniform 𝓕L¹ bound. Table "windows" has one row per k.
// Throws PreconditionError when radius(k)/Δξ < 8 for some k.
Report verify_partition(const PartitionFamily& family, const PartitionTolerances& tol = {},
                        const Fl1Options& fl1 = {});

// Sup of `value` over rows whose |center| <= Xi_max/2, and over all rows.
struct InnerOuterSup {
  double inner = 0.0;
  double full = 0.0;
  double growth() const;
};
InnerOuterSup inner_outer_sup(const std::vector<double>& centers, const std::vector<double>& value,
                              double xi_max);

// 𝓕L¹ options for window k: initial period scaled to the window width.
Fl1Options window_fl1_options(const Fl1Options& base, double radius);

}  // namespace amod
