#include "amod/spaces/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "amod/errors.hpp"
#include "amod/spectral/bracket.hpp"
#include "amod/spectral/fourier.hpp"
#include "amod/spectral/norms.hpp"
#include "amod/spectral/parallel.hpp"

namespace amod {

double spectral_leakage(const SampledFunction& spectrum, double radius) {
  const Grid& g = spectrum.grid();
  double total = 0.0, outside = 0.0;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const Point x = g.point(i);
    const double e = std::norm(spectrum[i]);
    total += e;
    if (std::hypot(x[0], x[1]) > radius) outside += e;
  }
  return total == 0.0 ? 0.0 : outside / total;
}

SampledFunction box_op(const SampledFunction& f, std::span<const double> window) {
  if (f.side() != Side::spatial) throw ConfigError("box_op expects a spatial-side function");
  if (window.size() != f.size()) throw ConfigError("box_op window does not match the grid");
  return fourier_inverse(fourier_forward(f).multiplied(window));
}

SampledFunction box_op(const SampledFunction& f, const PartitionFamily& family, int k) {
  if (!family.grid().same_geometry(f.grid())) {
    throw ConfigError("partition grid differs from the function grid");
  }
  const std::vector<double> w = family.dense_window(k);
  return box_op(f, w);
}

double lq_combine(std::span<const double> weight, std::span<const double> box_norm, Exponent q) {
  if (q.is_infinite()) {
    double m = 0.0;
    for (std::size_t i = 0; i < box_norm.size(); ++i) m = std::max(m, weight[i] * box_norm[i]);
    return m;
  }
  const double qq = q.value();
  double scale = 0.0;
  for (std::size_t i = 0; i < box_norm.size(); ++i) scale = std::max(scale, weight[i] * box_norm[i]);
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < box_norm.size(); ++i) sum += std::pow(weight[i] * box_norm[i] / scale, qq);
  return scale * std::pow(sum, 1.0 / qq);
}

namespace {

std::string leak_message(double leak, double radius) {
  std::ostringstream os;
  os << "spectral leakage: energy fraction " << leak << " outside the certified region |xi| <= "
     << radius << " exceeds the tolerance";
  return os.str();
}

// Box norms of f̂ against windows given as (first, values) patches.
template <class PatchOf>
std::vector<double> box_norms(const SampledFunction& spectrum, std::size_t count, Exponent p,
                              PatchOf&& patch_of) {
  std::vector<double> out(count);
  parallel::for_each_index(count, [&](std::size_t idx) {
    std::vector<Complex> piece(spectrum.size(), Complex(0.0));
    patch_of(idx, [&](std::size_t i, double w) { piece[i] = w * spectrum[i]; });
    out[idx] = lp_norm(fourier_inverse(SampledFunction(spectrum.grid(), std::move(piece))), p);
  });
  return out;
}

}  // namespace

NormResult alpha_mod_norm(const SampledFunction& f, const SpaceSpec& spec,
                          const PartitionFamily& family, double leakage_tolerance) {
  if (spec.alpha == 1.0) throw ConfigError("alpha = 1 is the Besov space; use besov_norm");
  if (std::abs(spec.alpha - family.alpha()) > 1e-12) {
    throw ConfigError("space alpha differs from the partition alpha");
  }
  if (f.side() != Side::spatial) throw ConfigError("norms take spatial-side functions");
  if (!family.grid().same_geometry(f.grid())) {
    throw ConfigError("partition grid differs from the function grid");
  }
  const SampledFunction spectrum = fourier_forward(f);
  NormResult r;
  const double radius = family.grid_covered_radius();
  r.leakage = spectral_leakage(spectrum, radius);
  if (r.leakage > leakage_tolerance) throw PreconditionError(leak_message(r.leakage, radius));

  const auto& ks = family.lattice().indices();
  r.box_norm = box_norms(spectrum, ks.size(), spec.p, [&](std::size_t idx, auto&& put) {
    const WindowPatch& p = family.patches()[idx];
    for (std::size_t j = 0; j < p.values.size(); ++j) put(p.first + j, p.values[j]);
  });
  const double e = spec.s / (1.0 - spec.alpha);
  for (int k : ks) {
    r.index.push_back(k);
    r.weight.push_back(std::pow(bracket(k), e));
  }
  r.value = lq_combine(r.weight, r.box_norm, spec.q);
  return r;
}

NormResult besov_norm(const SampledFunction& f, Exponent p, Exponent q, double s,
                      const DyadicFamily& family, double leakage_tolerance) {
  if (f.side() != Side::spatial) throw ConfigError("norms take spatial-side functions");
  if (!family.grid().same_geometry(f.grid())) {
    throw ConfigError("dyadic grid differs from the function grid");
  }
  const SampledFunction spectrum = fourier_forward(f);
  NormResult r;
  const double radius = std::min(family.covered_radius(), family.grid().frequency_extent());
  r.leakage = spectral_leakage(spectrum, radius);
  if (r.leakage > leakage_tolerance) throw PreconditionError(leak_message(r.leakage, radius));

  const std::size_t count = static_cast<std::size_t>(family.shells()) + 1;
  r.box_norm = box_norms(spectrum, count, p, [&](std::size_t j, auto&& put) {
    const auto& w = family.window(static_cast<int>(j));
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 0.0) put(i, w[i]);
    }
  });
  for (std::size_t j = 0; j < count; ++j) {
    r.index.push_back(static_cast<int>(j));
    r.weight.push_back(std::exp2(static_cast<double>(j) * s));
  }
  r.value = lq_combine(r.weight, r.box_norm, q);
  return r;
}

}  // namespace amod
