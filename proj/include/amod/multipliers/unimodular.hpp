#pragma once

#include "amod/multipliers/symbol.hpp"
#include "amod/spectral/sampled_function.hpp"

namespace amod {

// Band-limit requirement for apply_unimodular: the spectral energy fraction
// beyond (1 - margin)·extent must not exceed `tolerance`.
struct BandLimit {
  double margin = 0.125;
  double tolerance = 1e-10;
};

// e^{iμ(D)}f = 𝓕⁻¹(e^{iμ}·𝓕f), n in {1, 2}. Throws PreconditionError with the
// leaked fraction when f is not band-limited inside the grid.
SampledFunction apply_unimodular(const SampledFunction& f, const SymbolSpec& symbol,
                                 const BandLimit& band = {});

}  // namespace amod
