#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "amod/spectral/sampled_function.hpp"

namespace amod::oracle {

// Direct quadrature of ∫ f(x) e^{-2πixξ} dx on the grid, O(N²) (1-D).
inline SampledFunction naive_forward(const SampledFunction& f) {
  const Grid& g = f.grid();
  const Grid out = g.with_side(Side::frequency);
  const std::size_t n = g.size();
  std::vector<Complex> v(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double xi = out.coordinate(m);
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double x = g.coordinate(j);
      acc += f[j] * std::polar(1.0, -2.0 * std::numbers::pi * x * xi);
    }
    v[m] = acc * g.spatial_step();
  }
  return SampledFunction(out, std::move(v));
}

inline SampledFunction naive_inverse(const SampledFunction& fhat) {
  const Grid& g = fhat.grid();
  const Grid out = g.with_side(Side::spatial);
  const std::size_t n = g.size();
  std::vector<Complex> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = out.coordinate(j);
    Complex acc = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
      acc += fhat[m] * std::polar(1.0, 2.0 * std::numbers::pi * x * g.coordinate(m));
    }
    v[j] = acc * g.frequency_step();
  }
  return SampledFunction(out, std::move(v));
}

// Riemann-sum L^p norm, 1 <= p < ∞.
inline double riemann_lp(const SampledFunction& f, double p) {
  double s = 0.0;
  for (const Complex& v : f.values()) s += std::pow(std::abs(v), p);
  return std::pow(s * f.grid().cell_volume(), 1.0 / p);
}

inline double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace amod::oracle
