#include "amod/spectral/sampled_function.hpp"

#include <algorithm>
#include <cmath>

#include "amod/errors.hpp"

namespace amod {

SampledFunction::SampledFunction(Grid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw ConfigError("sample count " + std::to_string(values_.size()) +
                      " does not match grid size " + std::to_string(grid_.size()));
  }
  for (const Complex& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("sampled function contains a non-finite value");
    }
  }
}

SampledFunction SampledFunction::zeros(const Grid& grid) {
  return SampledFunction(grid, std::vector<Complex>(grid.size()));
}

SampledFunction SampledFunction::scaled(Complex c) const {
  std::vector<Complex> out(values_);
  for (auto& v : out) v *= c;
  return SampledFunction(grid_, std::move(out));
}

SampledFunction SampledFunction::multiplied(std::span<const double> weights) const {
  if (weights.size() != values_.size()) {
    throw ConfigError("weight length does not match sample count");
  }
  std::vector<Complex> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] * weights[i];
  return SampledFunction(grid_, std::move(out));
}

SampledFunction SampledFunction::multiplied(std::span<const Complex> weights) const {
  if (weights.size() != values_.size()) {
    throw ConfigError("weight length does not match sample count");
  }
  std::vector<Complex> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] * weights[i];
  return SampledFunction(grid_, std::move(out));
}

bool SampledFunction::vanishes_outside(double radius) const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const Point p = grid_.point(i);
    if (std::hypot(p[0], p[1]) > radius && values_[i] != Complex(0.0)) return false;
  }
  return true;
}

namespace {

void require_same_grid(const SampledFunction& a, const SampledFunction& b) {
  if (!(a.grid() == b.grid())) throw ConfigError("sampled functions live on different grids");
}

}  // namespace

SampledFunction operator+(const SampledFunction& a, const SampledFunction& b) {
  require_same_grid(a, b);
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return SampledFunction(a.grid(), std::move(out));
}

SampledFunction operator-(const SampledFunction& a, const SampledFunction& b) {
  require_same_grid(a, b);
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return SampledFunction(a.grid(), std::move(out));
}

double max_abs_difference(const SampledFunction& a, const SampledFunction& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(const SampledFunction& f) {
  double m = 0.0;
  for (const Complex& v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace amod
