#pragma once

#include <vector>

namespace amod {

// Scale exponent a = α/(1-α) of the α-covering.
double alpha_exponent(double alpha);

// Continuous center map c(t) = ⟨t⟩^a t and its inverse κ (the warped index
// coordinate). Both are odd and strictly increasing.
double center_map(double a, double t);
double center_map_derivative(double a, double t);
double index_coordinate(double a, double xi);

// The α-lattice in one dimension: indices k with |⟨k⟩^{α/(1-α)} k| <= Xi_max,
// centers ⟨k⟩^a k and unit radii ⟨k⟩^a.
class AlphaLattice {
 public:
  // Throws ConfigError unless 0 <= α < 1 (α = 1 is the dyadic family), n = 1
  // and Xi_max > 0.
  AlphaLattice(double alpha, int dim, double xi_max);

  double alpha() const { return alpha_; }
  double exponent() const { return a_; }
  int dim() const { return dim_; }
  double xi_max() const { return xi_max_; }
  // Largest index K; indices are -K..K.
  int max_index() const { return max_index_; }
  const std::vector<int>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(int k) const { return k >= -max_index_ && k <= max_index_; }

  double center(double k) const { return center_map(a_, k); }
  double radius(double k) const;
  double kappa(double xi) const { return index_coordinate(a_, xi); }

 private:
  double alpha_;
  double a_;
  int dim_;
  double xi_max_;
  int max_index_;
  std::vector<int> indices_;
};

}  // namespace amod
