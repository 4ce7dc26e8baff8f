#include "amod/spectral/fit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "amod/errors.hpp"

namespace amod {

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("slope fit needs at least two paired points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw DomainError("slope fit needs two distinct abscissae");
  return sxy / sxx;
}

double upper_half_log_slope(std::span<const double> scale, std::span<const double> value) {
  if (scale.size() != value.size() || scale.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(scale.begin(), scale.end());
  const double cut = *lo + 0.5 * (*hi - *lo);
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < scale.size(); ++i) {
    if (scale[i] >= cut && value[i] > 0.0 && scale[i] > 0.0) {
      lx.push_back(std::log(scale[i]));
      ly.push_back(std::log(value[i]));
    }
  }
  if (lx.size() < 2) return 0.0;
  if (std::all_of(lx.begin(), lx.end(), [&](double v) { return v == lx.front(); })) return 0.0;
  return least_squares_slope(lx, ly);
}

double relative_growth(double reference_sup, double full_sup) {
  if (reference_sup <= 0.0) return full_sup > 0.0 ? INFINITY : 0.0;
  return full_sup / reference_sup - 1.0;
}

}  // namespace amod
