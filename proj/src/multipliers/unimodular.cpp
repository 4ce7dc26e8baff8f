#include "amod/multipliers/unimodular.hpp"

#include <cmath>
#include <sstream>

#include "amod/errors.hpp"
#include "amod/spaces/spaces.hpp"
#include "amod/spectral/fourier.hpp"

namespace amod {

SampledFunction apply_unimodular(const SampledFunction& f, const SymbolSpec& symbol,
                                 const BandLimit& band) {
  if (f.side() != Side::spatial) throw ConfigError("apply_unimodular expects a spatial-side function");
  const SampledFunction spectrum = fourier_forward(f);
  const Grid& g = spectrum.grid();
  const double radius = (1.0 - band.margin) * g.frequency_extent();
  const double leak = spectral_leakage(spectrum, radius);
  if (leak > band.tolerance) {
    std::ostringstream os;
    os << "input is not band-limited: energy fraction " << leak << " beyond |xi| = " << radius;
    throw PreconditionError(os.str());
  }
  // e^{i·0} = 1: skip the round trip so the identity is exact.
  if (symbol.kind() == SymbolKind::zero) return f;
  std::vector<Complex> phase(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    phase[i] = std::polar(1.0, symbol.value(g.point(i), g.dim()));
  }
  return fourier_inverse(spectrum.multiplied(std::span<const Complex>(phase)));
}

}  // namespace amod
