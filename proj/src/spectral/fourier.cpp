#include "amod/spectral/fourier.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

#include "amod/errors.hpp"

namespace amod {

namespace detail {

namespace {

// FFTW's planner is not re-entrant; execution of an existing plan on new
// arrays is. Plans are created once per (dim, N, sign) and kept for the
// process lifetime.
class PlanCache {
 public:
  fftw_plan get(int dim, std::size_t samples, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto key = std::make_tuple(dim, samples, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    const std::size_t total = dim == 1 ? samples : samples * samples;
    fftw_complex* scratch = fftw_alloc_complex(total);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    const int fftw_sign = sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD;
    const int n = static_cast<int>(samples);
    fftw_plan plan = dim == 1 ? fftw_plan_dft_1d(n, scratch, scratch, fftw_sign, flags)
                              : fftw_plan_dft_2d(n, n, scratch, scratch, fftw_sign, flags);
    fftw_free(scratch);
    if (plan == nullptr) throw ConfigError("FFTW could not create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, std::size_t, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

void dft_in_place(std::span<Complex> data, int dim, std::size_t samples, int sign) {
  const std::size_t total = dim == 1 ? samples : samples * samples;
  if (data.size() != total) throw ConfigError("DFT buffer has the wrong length");
  fftw_plan plan = plan_cache().get(dim, samples, sign);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buf, buf);
}

}  // namespace detail

namespace {

// Centered index i ↔ wrap-around index (i + N/2) mod N, applied per axis.
// The phase (-1)^{m} accounts for the grid starting at x_0 = -L/2.
std::vector<Complex> centered_to_wrapped(std::span<const Complex> in, const Grid& grid,
                                         bool apply_sign) {
  const std::size_t n = grid.samples();
  const std::size_t half = n / 2;
  std::vector<Complex> out(in.size());
  if (grid.dim() == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const long m = static_cast<long>(i) - static_cast<long>(half);
      const double s = (apply_sign && (m & 1)) ? -1.0 : 1.0;
      out[(i + half) % n] = s * in[i];
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const long m = static_cast<long>(i) + static_cast<long>(j) - 2 * static_cast<long>(half);
        const double s = (apply_sign && (m & 1)) ? -1.0 : 1.0;
        out[((i + half) % n) * n + (j + half) % n] = s * in[i * n + j];
      }
    }
  }
  return out;
}

std::vector<Complex> wrapped_to_centered(std::span<const Complex> in, const Grid& grid) {
  const std::size_t n = grid.samples();
  const std::size_t half = n / 2;
  std::vector<Complex> out(in.size());
  if (grid.dim() == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const long m = static_cast<long>(i) - static_cast<long>(half);
      out[i] = ((m & 1) ? -1.0 : 1.0) * in[(i + half) % n];
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const long m = static_cast<long>(i) + static_cast<long>(j) - 2 * static_cast<long>(half);
        out[i * n + j] = ((m & 1) ? -1.0 : 1.0) * in[((i + half) % n) * n + (j + half) % n];
      }
    }
  }
  return out;
}

}  // namespace

SampledFunction fourier_forward(const SampledFunction& f) {
  const Grid& grid = f.grid();
  if (grid.side() != Side::spatial) {
    throw ConfigError("fourier_forward expects a spatial-side function");
  }
  std::vector<Complex> data(f.values().begin(), f.values().end());
  detail::dft_in_place(data, grid.dim(), grid.samples(), -1);
  const double scale = grid.with_side(Side::spatial).cell_volume();
  for (auto& v : data) v *= scale;
  return SampledFunction(grid.with_side(Side::frequency), wrapped_to_centered(data, grid));
}

SampledFunction fourier_inverse(const SampledFunction& g) {
  const Grid& grid = g.grid();
  if (grid.side() != Side::frequency) {
    throw ConfigError("fourier_inverse expects a frequency-side function");
  }
  std::vector<Complex> data = centered_to_wrapped(g.values(), grid, true);
  detail::dft_in_place(data, grid.dim(), grid.samples(), +1);
  const double scale = grid.cell_volume();
  for (auto& v : data) v *= scale;
  return SampledFunction(grid.with_side(Side::spatial), std::move(data));
}

}  // namespace amod
