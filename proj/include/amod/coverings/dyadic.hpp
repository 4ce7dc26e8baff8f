#pragma once

#include <vector>

#include "amod/spectral/grid.hpp"

namespace amod {

// Littlewood–Paley family φ_0 = φ, φ_j(ξ) = φ(2^{-j}ξ) - φ(2^{-j+1}ξ), with φ
// radial, ≡ 1 on |ξ| <= 4/3 and supported in |ξ| <= 3/2.
class DyadicFamily {
 public:
  static double bump(double xi);
  static double shell(int j, double xi);

  // Throws ConfigError unless n = 1, J >= 0 and the grid extent is at least
  // (3/2)·2^J.
  DyadicFamily(int shells, const Grid& grid);

  int shells() const { return shells_; }
  const Grid& grid() const { return grid_; }
  // Dense frequency-side samples of φ_j, j = 0..J.
  const std::vector<double>& window(int j) const { return windows_.at(static_cast<std::size_t>(j)); }
  // Σ_{j<=J} φ_j ≡ 1 on |ξ| <= (4/3)·2^J.
  double covered_radius() const;

 private:
  int shells_;
  Grid grid_;
  std::vector<std::vector<double>> windows_;
};

// Shell count fixed by the grid: floor(log2(extent · 2/3)).
int dyadic_shell_count(const Grid& grid);

DyadicFamily build_dyadic_partition(int shells, const Grid& grid);

}  // namespace amod
