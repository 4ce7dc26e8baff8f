#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "amod/coverings/lattice.hpp"
#include "amod/coverings/profile.hpp"
#include "amod/spectral/grid.hpp"

namespace amod {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return x > lo && x < hi; }
};

// Samples of one window on the frequency axis: values[j] belongs to axis
// index first + j of the DC-centered grid. Samples outside the patch are 0.
struct WindowPatch {
  int k = 0;
  std::size_t first = 0;
  std::vector<double> values;
};

// Smooth partition of unity {η_k} subordinate to the α-covering.
//
// Windows live in the warped index coordinate κ = c⁻¹(ξ): with the plateau
// profile g, w_k(ξ) = g(κ(ξ) - k) and η_k = w_k / Σ_{l∈ℤ} w_l. Hence
// supp η_k = (c(k - r₂), c(k + r₂)), η_k ≡ 1 where |κ - k| <= 1 - r₂, and the
// windows are dilation compatible with the radii ⟨k⟩^a.
class PartitionFamily {
 public:
  // Analytic family without grid samples. Throws ConfigError on a bad
  // profile and ConstructionError when Σ_l w_l drops below 1/2.
  PartitionFamily(AlphaLattice lattice, Profile profile);

  const AlphaLattice& lattice() const { return lattice_; }
  const Profile& profile() const { return profile_; }
  double alpha() const { return lattice_.alpha(); }

  // Raw bump w_l(ξ) and the normalizer Σ_{l∈ℤ} w_l(ξ).
  double raw_weight(int l, double xi) const;
  double weight_sum(double xi) const;
  // η_k(ξ) for any integer k (not only lattice members).
  double window(int k, double xi) const;
  double window_at_kappa(int k, double kappa) const;
  // log η_k(ξ); finite exactly on the open support even where η_k underflows.
  double log_window(int k, double xi) const;

  // Open support interval of η_k.
  Interval support(int k) const;
  // Largest c with supp η_k(⟨k⟩^a · + c_k) ⊆ B(0, c) over the lattice.
  double support_radius_c() const { return support_radius_c_; }
  // Largest C₁ with η_k = 1 on B(c_k, C₁⟨k⟩^a) for every lattice k.
  double plateau_radius_c1() const { return plateau_radius_c1_; }
  // |ξ| <= covered_radius is covered by lattice windows alone.
  double covered_radius() const;
  double min_weight_sum() const { return min_weight_sum_; }
  // Largest number of windows that are nonzero at one frequency.
  int max_overlap() const { return max_overlap_; }

  // Lattice indices whose windows overlap η_k (including k).
  std::vector<int> overlap_neighbors(int k) const;

  // Samples every lattice window on `grid`'s frequency axis. Requires n = 1
  // and frequency extent >= Xi_max (ConfigError otherwise). Patches are
  // clipped to the grid.
  void sample_on(const Grid& grid);
  bool has_samples() const { return grid_.has_value(); }
  // Frequency-side grid of the samples; throws ConfigError if unsampled.
  const Grid& grid() const;
  const std::vector<WindowPatch>& patches() const { return patches_; }
  // Patch of lattice index k.
  const WindowPatch& patch(int k) const;
  // Window expanded to a full frequency-side array.
  std::vector<double> dense_window(int k) const;
  // Radius of the certified region on the sampled grid:
  // min(covered_radius, grid extent).
  double grid_covered_radius() const;

 private:
  AlphaLattice lattice_;
  Profile profile_;
  double support_radius_c_ = 0.0;
  double plateau_radius_c1_ = 0.0;
  double min_weight_sum_ = 0.0;
  int max_overlap_ = 0;
  std::optional<Grid> grid_;
  std::vector<WindowPatch> patches_;
};

// Lattice + profile + grid samples in one step.
PartitionFamily build_partition(const AlphaLattice& lattice, const Grid& grid,
                                const Profile& profile = {});

}  // namespace amod
