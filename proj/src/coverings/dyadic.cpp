#include "amod/coverings/dyadic.hpp"

#include <cmath>
#include <string>

#include "amod/coverings/profile.hpp"
#include "amod/errors.hpp"

namespace amod {

double DyadicFamily::bump(double xi) {
  return smoothstep(1.0 - (std::abs(xi) - 4.0 / 3.0) * 6.0);
}

double DyadicFamily::shell(int j, double xi) {
  if (j == 0) return bump(xi);
  return bump(std::ldexp(xi, -j)) - bump(std::ldexp(xi, -j + 1));
}

DyadicFamily::DyadicFamily(int shells, const Grid& grid)
    : shells_(shells), grid_(grid.with_side(Side::frequency)) {
  if (grid.dim() != 1) throw ConfigError("dyadic family requires a one-dimensional grid");
  if (shells < 0) throw ConfigError("shell count must be nonnegative");
  const double need = 1.5 * std::ldexp(1.0, shells);
  if (grid_.frequency_extent() < need) {
    throw ConfigError("grid frequency extent " + std::to_string(grid_.frequency_extent()) +
                      " below (3/2)*2^J = " + std::to_string(need));
  }
  windows_.assign(static_cast<std::size_t>(shells) + 1, std::vector<double>(grid_.size()));
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    const double xi = grid_.coordinate(i);
    for (int j = 0; j <= shells; ++j) windows_[static_cast<std::size_t>(j)][i] = shell(j, xi);
  }
}

double DyadicFamily::covered_radius() const { return 4.0 / 3.0 * std::ldexp(1.0, shells_); }

int dyadic_shell_count(const Grid& grid) {
  const double extent = grid.with_side(Side::frequency).frequency_extent();
  return static_cast<int>(std::floor(std::log2(extent * 2.0 / 3.0)));
}

DyadicFamily build_dyadic_partition(int shells, const Grid& grid) {
  return DyadicFamily(shells, grid);
}

}  // namespace amod
