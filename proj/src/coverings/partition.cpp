#include "amod/coverings/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "amod/errors.hpp"
#include "amod/report.hpp"
#include "amod/spectral/parallel.hpp"

namespace amod {

namespace {

constexpr int kScan = 20000;
constexpr double kWeightFloor = 0.5;

}  // namespace

PartitionFamily::PartitionFamily(AlphaLattice lattice, Profile profile)
    : lattice_(std::move(lattice)), profile_(profile) {
  profile_.validate();

  // Σ_l g(κ - l) is 1-periodic in κ, so one period decides covering and
  // overlap for every α.
  double worst = 1e300;
  double worst_kappa = 0.0;
  const int reach = static_cast<int>(std::ceil(profile_.outer)) + 1;
  for (int i = 0; i <= kScan; ++i) {
    const double kappa = static_cast<double>(i) / kScan;
    double sum = 0.0;
    int count = 0;
    for (int l = -reach; l <= reach + 1; ++l) {
      const double w = profile_(kappa - l);
      sum += w;
      if (w > 0.0) ++count;
    }
    if (sum < worst) {
      worst = sum;
      worst_kappa = kappa;
    }
    max_overlap_ = std::max(max_overlap_, count);
  }
  min_weight_sum_ = worst;
  if (worst < kWeightFloor) {
    throw ConstructionError("covering gap: sum of window bumps " + std::to_string(worst) +
                                " < " + std::to_string(kWeightFloor) + " at xi = " +
                                std::to_string(lattice_.center(worst_kappa)),
                            lattice_.center(worst_kappa));
  }

  const double r2 = profile_.outer;
  const double plateau = 1.0 - r2;
  double c = 0.0;
  double c1 = 1e300;
  for (int k : lattice_.indices()) {
    const double ck = lattice_.center(k);
    const double rk = lattice_.radius(k);
    c = std::max(c, std::max(lattice_.center(k + r2) - ck, ck - lattice_.center(k - r2)) / rk);
    if (plateau > 0.0 && plateau < r2) {
      c1 = std::min(c1, std::min(lattice_.center(k + plateau) - ck,
                                 ck - lattice_.center(k - plateau)) / rk);
    } else {
      c1 = 0.0;
    }
  }
  support_radius_c_ = c;
  plateau_radius_c1_ = c1;
}

double PartitionFamily::raw_weight(int l, double xi) const {
  return profile_(lattice_.kappa(xi) - l);
}

double PartitionFamily::window_at_kappa(int k, double kappa) const {
  const double r2 = profile_.outer;
  if (std::abs(kappa - k) >= r2) return 0.0;
  const int first = static_cast<int>(std::floor(kappa - r2));
  const int last = static_cast<int>(std::ceil(kappa + r2));
  double sum = 0.0;
  double own = 0.0;
  for (int l = first; l <= last; ++l) {
    const double w = profile_(kappa - l);
    sum += w;
    if (l == k) own = w;
  }
  return own == 0.0 ? 0.0 : own / sum;
}

double PartitionFamily::log_window(int k, double xi) const {
  const double kappa = lattice_.kappa(xi);
  if (std::abs(kappa - k) >= profile_.outer) return -INFINITY;
  // The normalizer is >= 1/2, so only the numerator needs the log domain.
  return profile_.log_value(kappa - k) - std::log(weight_sum(xi));
}

double PartitionFamily::weight_sum(double xi) const {
  const double kappa = lattice_.kappa(xi);
  const double r2 = profile_.outer;
  double sum = 0.0;
  const int first = static_cast<int>(std::floor(kappa - r2));
  const int last = static_cast<int>(std::ceil(kappa + r2));
  for (int l = first; l <= last; ++l) sum += profile_(kappa - l);
  return sum;
}

double PartitionFamily::window(int k, double xi) const {
  return window_at_kappa(k, lattice_.kappa(xi));
}

Interval PartitionFamily::support(int k) const {
  return {lattice_.center(k - profile_.outer), lattice_.center(k + profile_.outer)};
}

double PartitionFamily::covered_radius() const {
  return lattice_.center(lattice_.max_index() + 1 - profile_.outer);
}

std::vector<int> PartitionFamily::overlap_neighbors(int k) const {
  const Interval own = support(k);
  std::vector<int> out;
  const int reach = static_cast<int>(std::ceil(2.0 * profile_.outer)) + 1;
  for (int l = k - reach; l <= k + reach; ++l) {
    if (!lattice_.contains(l)) continue;
    const Interval other = support(l);
    if (other.lo < own.hi && own.lo < other.hi) out.push_back(l);
  }
  return out;
}

void PartitionFamily::sample_on(const Grid& grid) {
  if (grid.dim() != 1) throw ConfigError("partition sampling requires a one-dimensional grid");
  const Grid freq = grid.with_side(Side::frequency);
  if (freq.frequency_extent() < lattice_.xi_max()) {
    const double need = 2.0 * freq.period() * lattice_.xi_max();
    std::size_t pow2 = 1;
    while (static_cast<double>(pow2) < need) pow2 *= 2;
    throw ConfigError("grid too coarse: frequency extent " + format_number(freq.frequency_extent()) +
                      " is below Xi_max " + format_number(lattice_.xi_max()) + "; need N >= " +
                      std::to_string(pow2) + " at L = " + format_number(freq.period()));
  }
  const auto& ks = lattice_.indices();
  std::vector<WindowPatch> patches(ks.size());
  const double step = freq.frequency_step();
  const long half = static_cast<long>(freq.samples() / 2);
  parallel::for_each_index(ks.size(), [&](std::size_t idx) {
    const int k = ks[idx];
    const Interval s = support(k);
    long m_lo = std::max(static_cast<long>(std::floor(s.lo / step)), -half);
    long m_hi = std::min(static_cast<long>(std::ceil(s.hi / step)), half - 1);
    WindowPatch p;
    p.k = k;
    p.first = static_cast<std::size_t>(m_lo + half);
    for (long m = m_lo; m <= m_hi; ++m) p.values.push_back(window(k, m * step));
    patches[idx] = std::move(p);
  });
  grid_ = freq;
  patches_ = std::move(patches);
}

const Grid& PartitionFamily::grid() const {
  if (!grid_) throw ConfigError("partition family has no grid samples");
  return *grid_;
}

const WindowPatch& PartitionFamily::patch(int k) const {
  if (!grid_) throw ConfigError("partition family has no grid samples");
  if (!lattice_.contains(k)) throw ConfigError("index " + std::to_string(k) + " not in lattice");
  return patches_[static_cast<std::size_t>(k + lattice_.max_index())];
}

std::vector<double> PartitionFamily::dense_window(int k) const {
  const WindowPatch& p = patch(k);
  std::vector<double> out(grid_->size(), 0.0);
  std::copy(p.values.begin(), p.values.end(), out.begin() + static_cast<long>(p.first));
  return out;
}

double PartitionFamily::grid_covered_radius() const {
  return std::min(covered_radius(), grid().frequency_extent());
}

PartitionFamily build_partition(const AlphaLattice& lattice, const Grid& grid,
                                const Profile& profile) {
  PartitionFamily family(lattice, profile);
  family.sample_on(grid);
  return family;
}

}  // namespace amod
