#pragma once

#include <string>
#include <utility>
#include <vector>

#include "amod/coverings/partition.hpp"
#include "amod/harness/families.hpp"
#include "amod/harness/profiles.hpp"
#include "amod/multipliers/symbol.hpp"
#include "amod/report.hpp"
#include "amod/spaces/spaces.hpp"

namespace amod {

// Loss threshold |1/p - 1/2|·max{2s, 0} (n = 1).
double loss_threshold(Exponent p, double s);

struct ProbeSpec {
  SymbolSpec symbol = SymbolSpec::zero();
  // p, q, α of the spaces; s is the symbol class (∂²μ ∈ 𝓕M^{1,∞}_{2α-2s,α}).
  SpaceSpec space;
  double delta = 0.0;
  FamilySpec family;
  GateTolerances tol;
  // Reject δ below the threshold (PreconditionError) instead of probing.
  bool enforce_threshold = true;
  // Also probe with δ/2 and report its growth (diagnostic).
  bool sharpness_diagnostic = true;
  // Turn the δ/2 diagnostic into gated checks.
  bool gate_sharpness = false;
};

// max over the family of ‖e^{iμ(D)}f‖_{M^{p,q}_{0,α}} / ‖f‖_{M^{p,q}_{δ,α}},
// gated on stability as the modulation reach doubles. Table "members".
Report operator_norm_probe(const ProbeSpec& spec, const PartitionFamily& family);

// p = 2, s = 0, q ∈ {1, 2, ∞}: ratio of norms of e^{iμ(D)}f and f within
// 1 ± tolerance for every symbol and function. Table "ratios".
Report plancherel_probe(const std::vector<SymbolSpec>& symbols,
                        const std::vector<FamilyMember>& functions, const PartitionFamily& family,
                        double tolerance = 1e-6);

// max_k Σ_{l∈Γ_k} (⟨l⟩/⟨k⟩)^{s/(1-α)}: the Young-inequality constant of the
// convolution estimate on this partition.
double convolution_bound(double s, const PartitionFamily& family);

struct ConvolutionRatio {
  double numerator = 0.0;
  double f_norm = 0.0;
  double g_norm = 0.0;
  double ratio = 0.0;
};

// ‖f∗g‖_{M^{p,q}_{0,α}} / (‖f‖_{M^{p,q}_{s,α}}·‖g‖_{M^{1,∞}_{-s,α}}), with
// f∗g = 𝓕⁻¹(f̂ ĝ). ratio is NaN when the denominator vanishes.
ConvolutionRatio convolution_ratio(const SampledFunction& f, const SampledFunction& g,
                                   const SpaceSpec& spec, const PartitionFamily& family);

// Random band-limited pairs sharing spectral centers (seeded).
std::vector<std::pair<SampledFunction, SampledFunction>> convolution_pairs(
    const Grid& grid, std::size_t count, double reach, double band, std::uint64_t seed);

// Ratios over the pairs; checks every ratio against convolution_bound.
Report convolution_probe(const std::vector<std::pair<SampledFunction, SampledFunction>>& pairs,
                         const SpaceSpec& spec, const PartitionFamily& family);

// Convolution ratio of f against approximate identities g with ĝ a plateau
// cutoff supported in |ξ| <= fraction·R (R the covered radius), one per
// fraction; checks the ratio settles (relative change of the last step below
// `tolerance`).
Report mollifier_sweep(const SampledFunction& f, const std::vector<double>& reach_fractions,
                       const SpaceSpec& spec, const PartitionFamily& family,
                       double tolerance = 0.10);

struct BernsteinMember {
  std::string label;
  // Dilation λ of g(λξ); 1 for undilated members.
  double scale = 1.0;
  SampledFunction g;  // frequency side
};

struct BernsteinRatio {
  double lp = 0.0;
  double sobolev = 0.0;
  double ratio = 0.0;
};

// Derivative order [n(1/p - 1/2)] + 1 (n = 1).
int bernstein_order(Exponent p);

// ‖𝓕⁻¹g‖_{L^p} / Σ_{γ<=order} ‖∂^γ g‖_{L²}; derivatives by central
// differences on the frequency grid. DomainError for p > 2.
BernsteinRatio bernstein_ratio(const SampledFunction& g, Exponent p);

// Dilations g(λξ) of a fixed bump for each λ plus `random_count` seeded bumps
// with random centers, widths and profiles.
std::vector<BernsteinMember> bernstein_family(const Grid& grid, const std::vector<double>& lambdas,
                                              std::size_t random_count, std::uint64_t seed);

// Checks: finite ratios; for p = 2, ratio <= 1 + 1e-6; growth of the max
// ratio from |log2 λ| <= max - 1 to the full dilation range below tol.growth.
Report bernstein_probe(const std::vector<BernsteinMember>& members, Exponent p,
                       const GateTolerances& tol = {});

// Norms of the same functions under two partitions of equal α; ratios must
// lie in [1/C, C]. Table "ratios".
Report norm_equivalence_probe(const std::vector<FamilyMember>& functions, const SpaceSpec& spec,
                              const PartitionFamily& first, const PartitionFamily& second,
                              double constant = 5.0);

}  // namespace amod
