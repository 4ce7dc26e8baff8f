#include "amod/harness/families.hpp"

#include <cmath>
#include <numbers>

#include "amod/coverings/profile.hpp"
#include "amod/errors.hpp"
#include "amod/spectral/fourier.hpp"

namespace amod {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::gaussians: return "gaussians";
    case FamilyKind::modulated_gaussians: return "modulated_gaussians";
    case FamilyKind::chirps: return "chirps";
    case FamilyKind::random_band_limited: return "random_band_limited";
  }
  return "gaussians";
}

FamilyKind parse_family_kind(const std::string& text) {
  if (text == "gaussians") return FamilyKind::gaussians;
  if (text == "modulated_gaussians") return FamilyKind::modulated_gaussians;
  if (text == "chirps") return FamilyKind::chirps;
  if (text == "random_band_limited") return FamilyKind::random_band_limited;
  throw ConfigError("unknown test family '" + text + "'");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::string label(const char* kind, double center, double width, double extra = NAN) {
  std::string s = std::string(kind) + "(xi0=" + std::to_string(center) + ",w=" + std::to_string(width);
  if (!std::isnan(extra)) s += ",r=" + std::to_string(extra);
  return s + ")";
}

SampledFunction gaussian(const Grid& grid, double center, double width, double chirp) {
  const double pi = std::numbers::pi;
  std::vector<Complex> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = grid.coordinate(i);
    v[i] = std::exp(-pi * x * x / (width * width)) *
           std::polar(1.0, 2.0 * pi * center * x + pi * chirp * x * x);
  }
  return SampledFunction(grid, std::move(v));
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(index + 0x9E3779B97F4A7C15ull));
}

NormalStream::NormalStream(std::uint64_t seed) : engine_(seed) {}

double NormalStream::uniform() {
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double NormalStream::normal() {
  if (spare_) {
    const double s = *spare_;
    spare_.reset();
    return s;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double th = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(th);
  return r * std::cos(th);
}

std::vector<double> modulation_ladder(double reach, int steps) {
  std::vector<double> out{0.0};
  for (int j = steps - 1; j >= 0; --j) out.push_back(reach * std::exp2(-0.5 * j));
  return out;
}

SampledFunction random_band_limited(const Grid& spatial, double center, double band,
                                    std::uint64_t seed) {
  const Grid freq = spatial.with_side(Side::frequency);
  NormalStream rng(seed);
  std::vector<Complex> v(freq.size(), Complex(0.0));
  const Cutoff taper{0.5 * band};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double t = taper(freq.coordinate(i) - center);
    // Draw for every sample so the stream position is grid-aligned.
    const double re = rng.normal();
    const double im = rng.normal();
    if (t > 0.0) v[i] = t * Complex(re, im);
  }
  return fourier_inverse(SampledFunction(freq, std::move(v)));
}

std::vector<FamilyMember> make_family(const FamilySpec& spec, const Grid& grid) {
  if (grid.dim() != 1) throw ConfigError("test families are one-dimensional");
  const Grid g = grid.with_side(Side::spatial);
  std::vector<FamilyMember> out;
  const auto ladder = modulation_ladder(spec.reach, spec.ladder_steps);
  // Centers of one ladder point: the point itself, plus κ-shifts into the cell
  // below it (never past the reach).
  auto cell = [&](double point) {
    std::vector<double> cs{point};
    if (!spec.adapted_alpha || point == 0.0 || spec.cell_offsets <= 1) return cs;
    const double a = alpha_exponent(*spec.adapted_alpha);
    const double kappa = index_coordinate(a, point);
    for (int j = 1; j < spec.cell_offsets; ++j) {
      const double shifted = kappa - static_cast<double>(j) / spec.cell_offsets;
      if (shifted > 0.0) cs.push_back(center_map(a, shifted));
    }
    return cs;
  };
  switch (spec.kind) {
    case FamilyKind::gaussians:
      for (double w : spec.widths) out.push_back({label("gauss", 0, w), 0.0, 0.0, w, gaussian(g, 0, w, 0)});
      break;
    case FamilyKind::modulated_gaussians:
      for (double point : ladder) {
        for (double c : cell(point)) {
          for (double w : spec.widths) out.push_back({label("mod", c, w), c, point, w, gaussian(g, c, w, 0)});
          if (spec.adapted_alpha) {
            const double a = alpha_exponent(*spec.adapted_alpha);
            const double w = 1.0 / std::pow(std::hypot(1.0, index_coordinate(a, c)), a);
            out.push_back({label("adapted", c, w), c, point, w, gaussian(g, c, w, 0)});
          }
        }
      }
      break;
    case FamilyKind::chirps:
      for (double point : ladder) {
        for (double c : cell(point)) {
          for (double r : spec.chirp_rates) {
            out.push_back({label("chirp", c, 1.0, r), c, point, 1.0, gaussian(g, c, 1.0, r)});
          }
        }
      }
      break;
    case FamilyKind::random_band_limited:
      for (std::size_t i = 0; i < spec.count; ++i) {
        const std::uint64_t s = derive_seed(spec.seed, i);
        NormalStream pick(s);
        const double c = (2.0 * pick.uniform() - 1.0) * spec.reach;
        out.push_back({"random(" + std::to_string(i) + ")", c, c, spec.band,
                       random_band_limited(g, c, spec.band, derive_seed(s, 1))});
      }
      break;
  }
  return out;
}

}  // namespace amod
