#include "amod/spectral/grid.hpp"

#include <bit>
#include <cmath>

#include "amod/errors.hpp"

namespace amod {

std::string to_string(Side side) {
  return side == Side::spatial ? "spatial" : "frequency";
}

Side parse_side(const std::string& text) {
  if (text == "spatial") return Side::spatial;
  if (text == "frequency") return Side::frequency;
  throw ConfigError("unknown grid side '" + text + "'");
}

Grid::Grid(int dim, std::size_t samples, double period, Side side)
    : dim_(dim), samples_(samples), period_(period), side_(side) {
  if (dim != 1 && dim != 2) {
    throw ConfigError("grid dimension must be 1 or 2, got " + std::to_string(dim));
  }
  if (samples < 2 || !std::has_single_bit(samples)) {
    throw ConfigError("samples per axis must be a power of two >= 2, got " +
                      std::to_string(samples));
  }
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw ConfigError("grid period must be positive and finite");
  }
}

std::size_t Grid::size() const {
  return dim_ == 1 ? samples_ : samples_ * samples_;
}

double Grid::step() const {
  return side_ == Side::spatial ? spatial_step() : frequency_step();
}

double Grid::cell_volume() const {
  const double h = step();
  return dim_ == 1 ? h : h * h;
}

double Grid::frequency_extent() const {
  return static_cast<double>(samples_) / (2.0 * period_);
}

long Grid::frequency_label(std::size_t i) const {
  return static_cast<long>(i) - static_cast<long>(samples_ / 2);
}

double Grid::coordinate(std::size_t i) const {
  if (side_ == Side::spatial) {
    return -0.5 * period_ + static_cast<double>(i) * spatial_step();
  }
  return static_cast<double>(frequency_label(i)) / period_;
}

std::array<std::size_t, 2> Grid::unflatten(std::size_t flat) const {
  if (dim_ == 1) return {flat, 0};
  return {flat / samples_, flat % samples_};
}

Point Grid::point(std::size_t flat) const {
  const auto idx = unflatten(flat);
  if (dim_ == 1) return {coordinate(idx[0]), 0.0};
  return {coordinate(idx[0]), coordinate(idx[1])};
}

Grid Grid::dual() const {
  return with_side(side_ == Side::spatial ? Side::frequency : Side::spatial);
}

Grid Grid::with_side(Side side) const { return Grid(dim_, samples_, period_, side); }

bool Grid::same_geometry(const Grid& other) const {
  return dim_ == other.dim_ && samples_ == other.samples_ && period_ == other.period_;
}

}  // namespace amod
