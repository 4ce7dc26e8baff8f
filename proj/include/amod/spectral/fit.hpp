#pragma once

#include <span>

namespace amod {

// Least-squares slope of y against x. Requires at least two distinct x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

// Slope of log(value) against log(scale) over the entries whose scale lies
// in the upper half of the scale range, [min + (max-min)/2, max]. Entries with
// value <= 0 are skipped. Returns 0 when fewer than two usable points remain.
double upper_half_log_slope(std::span<const double> scale, std::span<const double> value);

// Relative growth max(full)/max(reference) - 1 used by the doubling gates.
double relative_growth(double reference_sup, double full_sup);

}  // namespace amod
