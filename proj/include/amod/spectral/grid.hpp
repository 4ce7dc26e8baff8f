#pragma once

#include <array>
#include <cstddef>
#include <string>

namespace amod {

enum class Side { spatial, frequency };

std::string to_string(Side side);
Side parse_side(const std::string& text);

// A point of R^n for n <= 2; unused coordinates are zero.
using Point = std::array<double, 2>;

// Uniform periodic grid over [-L/2, L/2)^n with N samples per axis, together
// with its dual frequency lattice ξ_m = m/L, m in [-N/2, N/2).
//
// Spatial samples are stored in natural order x_j = -L/2 + j·L/N; frequency
// samples are stored DC-centered, so index i on an axis maps to m = i - N/2.
// Storage is row-major with the last axis fastest.
class Grid {
 public:
  Grid(int dim, std::size_t samples, double period, Side side);

  int dim() const { return dim_; }
  std::size_t samples() const { return samples_; }
  double period() const { return period_; }
  Side side() const { return side_; }

  // Total number of samples N^n.
  std::size_t size() const;

  double spatial_step() const { return period_ / static_cast<double>(samples_); }
  double frequency_step() const { return 1.0 / period_; }
  // Step along an axis on this grid's own side.
  double step() const;
  // Quadrature weight of one sample (step^n).
  double cell_volume() const;
  // Largest |ξ| represented on an axis: N/(2L).
  double frequency_extent() const;

  // Coordinate of axis index i on this grid's side.
  double coordinate(std::size_t i) const;
  // Integer frequency label m for axis index i (frequency side only).
  long frequency_label(std::size_t i) const;
  // Axis indices of flat index `flat`.
  std::array<std::size_t, 2> unflatten(std::size_t flat) const;
  Point point(std::size_t flat) const;

  // Same geometry, other side.
  Grid dual() const;
  Grid with_side(Side side) const;

  // Same n, N, L (sides may differ).
  bool same_geometry(const Grid& other) const;
  friend bool operator==(const Grid& a, const Grid& b) {
    return a.same_geometry(b) && a.side_ == b.side_;
  }

 private:
  int dim_;
  std::size_t samples_;
  double period_;
  Side side_;
};

}  // namespace amod
