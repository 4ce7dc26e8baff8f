#pragma once

#include <cmath>
#include <span>

namespace amod {

// Japanese bracket ⟨x⟩ = (1 + |x|²)^{1/2}.
inline double bracket(double x) { return std::hypot(1.0, x); }

inline double bracket(std::span<const double> x) {
  double sq = 1.0;
  for (double v : x) sq += v * v;
  return std::sqrt(sq);
}

}  // namespace amod
