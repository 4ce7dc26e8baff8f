#pragma once

#include <complex>
#include <span>
#include <type_traits>
#include <vector>

#include "amod/spectral/grid.hpp"

namespace amod {

using Complex = std::complex<double>;

// Complex samples of a function on a Grid, row-major, matching the grid's
// storage order. Immutable after construction.
class SampledFunction {
 public:
  // Throws ConfigError on size mismatch and DomainError on non-finite values.
  SampledFunction(Grid grid, std::vector<Complex> values);

  static SampledFunction zeros(const Grid& grid);

  // Samples f at every grid point. `f` takes either a double (n = 1) or a
  // Point.
  template <class F>
  static SampledFunction sample(const Grid& grid, F&& f) {
    std::vector<Complex> values(grid.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if constexpr (std::is_invocable_v<F, double>) {
        values[i] = Complex(f(grid.point(i)[0]));
      } else {
        values[i] = Complex(f(grid.point(i)));
      }
    }
    return SampledFunction(grid, std::move(values));
  }

  const Grid& grid() const { return grid_; }
  Side side() const { return grid_.side(); }
  std::span<const Complex> values() const { return values_; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  SampledFunction scaled(Complex c) const;
  // Pointwise product with real weights of the same length.
  SampledFunction multiplied(std::span<const double> weights) const;
  SampledFunction multiplied(std::span<const Complex> weights) const;

  // Zero samples at every point with |coordinate| > radius (scan).
  bool vanishes_outside(double radius) const;

 private:
  Grid grid_;
  std::vector<Complex> values_;
};

SampledFunction operator+(const SampledFunction& a, const SampledFunction& b);
SampledFunction operator-(const SampledFunction& a, const SampledFunction& b);

// max_i |a_i - b_i| on identical grids.
double max_abs_difference(const SampledFunction& a, const SampledFunction& b);
double max_abs(const SampledFunction& f);

}  // namespace amod
