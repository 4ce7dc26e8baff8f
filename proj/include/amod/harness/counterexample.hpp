#pragma once

#include "amod/coverings/partition.hpp"
#include "amod/report.hpp"
#include "amod/spectral/norms.hpp"

namespace amod {

// h(u) = e^{1 - 1/(1-(u/r)²)} on |u| < r, 0 elsewhere; h(0) = 1.
struct CompactBump {
  double radius = 0.25;
  double value(double u) const;
  double derivative(double u) const;
  // Point in (0, r) where |h'| is largest, and that maximum.
  double steepest_point() const;
  double max_slope() const;
};

// H(ξ) = Σ_{k∈ℤ} h(ξ - c_k) for the lattice centers c_k of `family`.
class BumpTrain {
 public:
  BumpTrain(CompactBump bump, const AlphaLattice& lattice);
  double value(double xi) const;
  double derivative(double xi) const;

 private:
  CompactBump bump_;
  const AlphaLattice* lattice_;
};

struct CounterexampleTolerances {
  double fm_drift = 0.05;
};

// (a) sup_k ‖η_k H‖_{𝓕L¹} stable between the inner half and the full lattice;
// (b) max |H'| near each center equals max |h'|, and the N₀ functional
// |H'(ξ)|·⟨ξ⟩ along the centers grows, so H is not a Mikhlin-class symbol.
// Throws PreconditionError unless radius < (c_1 - c_0)/2.
Report counterexample_h(const CompactBump& bump, const PartitionFamily& family,
                        const CounterexampleTolerances& tol = {}, const Fl1Options& options = {});

}  // namespace amod
