#pragma once

#include <vector>

#include "amod/coverings/partition.hpp"
#include "amod/report.hpp"

namespace amod {

// Lattice indices l whose window meets the dilated window η_k(D⁻¹·),
// D = ⟨k⟩^{δ/(1-α)²}.
struct EkGeometry {
  int k = 0;
  double delta = 0.0;
  double alpha = 0.0;
  double dilation = 1.0;
  // Brute force: support intervals of every lattice window against the
  // dilated support interval.
  std::vector<int> members;
  // Definitional: positivity sets of the evaluated windows located by
  // bisection, and the product η_l·η_k(D⁻¹·) evaluated inside the overlap.
  std::vector<int> definitional_members;
  bool enumeration_match = false;
  std::size_t count = 0;
  // ⟨l⟩ / ⟨k⟩^{1+δ/(1-α)} over members.
  double bracket_ratio_min = 0.0;
  double bracket_ratio_max = 0.0;
  // |c_k - D⁻¹ c_l| / ⟨k⟩^a over members.
  double distance_max = 0.0;
};

// Throws PreconditionError when the dilated support leaves the covered
// region of the (analytic) family.
EkGeometry ek_index_set(int k, double delta, const PartitionFamily& family);

struct EkTolerances {
  double slope_relative = 0.15;
  double bracket_constant = 10.0;
};

// E_k for every k in `ks`: table "ek", checks that both enumerations agree,
// that the bracket band [1/C, C] holds with C < bracket_constant, and that
// the log–log slope of #E_k against ⟨k⟩ is within slope_relative of δ/(1-α).
Report ek_sweep(const std::vector<int>& ks, double delta, const PartitionFamily& family,
                const EkTolerances& tol = {});

// Γ_k = {l : supp η_k ∩ supp η_l ≠ ∅} within the lattice.
std::vector<int> gamma_neighbors(int k, const PartitionFamily& family);

// Table "gamma" of |Γ_k| over the lattice, with max_count <= limit checked.
Report gamma_sweep(const PartitionFamily& family, int limit);

}  // namespace amod
