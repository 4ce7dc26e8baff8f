#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "amod/coverings/lattice.hpp"
#include "amod/spectral/sampled_function.hpp"

namespace amod {

enum class FamilyKind { gaussians, modulated_gaussians, chirps, random_band_limited };

std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& text);

struct FamilySpec {
  FamilyKind kind = FamilyKind::modulated_gaussians;
  // Gaussian widths w in e^{-πx²/w²}.
  std::vector<double> widths{0.25, 0.5, 1.0, 2.0};
  // Largest modulation center; the ladder is reach·2^{-j/2}, j < ladder_steps,
  // plus ξ₀ = 0.
  double reach = 8.0;
  int ladder_steps = 8;
  // Chirp rates r in e^{iπ r x²}.
  std::vector<double> chirp_rates{0.25, 1.0, 4.0};
  // When set, each modulation center also gets the window-adapted width
  // 1/⟨κ(ξ₀)⟩^a of this α, and every ladder point is repeated at
  // `cell_offsets` evenly spaced shifts of the warped index κ down across
  // one lattice cell, so the per-point max is an envelope over window positions.
  std::optional<double> adapted_alpha;
  int cell_offsets = 4;
  // Random band-limited members: count, spectral half-width and seed.
  std::size_t count = 20;
  double band = 2.0;
  std::uint64_t seed = 1;
};

struct FamilyMember {
  std::string label;
  // Modulation / spectral center ξ₀ and the ladder point it belongs to.
  double center = 0.0;
  double ladder_point = 0.0;
  double width = 0.0;
  SampledFunction f;
};

// Seed of item `index` derived from `base` by splitmix64 mixing:
//   mix(base ^ mix(index + 0x9E3779B97F4A7C15)).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Modulation centers {0} ∪ {reach·2^{-j/2}}, ascending.
std::vector<double> modulation_ladder(double reach, int steps);

// Spatial-side members on `grid` (n = 1), in deterministic order.
std::vector<FamilyMember> make_family(const FamilySpec& spec, const Grid& grid);

// Random spectrum with i.i.d. complex normal samples tapered to the band
// |ξ - center| < band; returned spatial-side.
SampledFunction random_band_limited(const Grid& grid, double center, double band,
                                    std::uint64_t seed);

// Standard normal sequence from mt19937_64 via Box–Muller (platform-stable).
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed);
  double uniform();
  double normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

}  // namespace amod
