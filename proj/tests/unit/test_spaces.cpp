#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <numbers>

#include "json.hpp"

#include "amod/coverings/dyadic.hpp"
#include "amod/coverings/partition.hpp"
#include "amod/coverings/verify.hpp"
#include "amod/errors.hpp"
#include "amod/harness/families.hpp"
#include "amod/spaces/class_norms.hpp"
#include "amod/spaces/spaces.hpp"
#include "amod/spectral/amsf.hpp"
#include "amod/spectral/bracket.hpp"
#include "amod/spectral/fourier.hpp"
#include "amod/spectral/norms.hpp"
#include "oracles.hpp"

using namespace amod;

namespace {

const Grid kGrid(1, 2048, 64.0, Side::spatial);

PartitionFamily family(double alpha, double xi_max = 16.0) {
  return build_partition(AlphaLattice(alpha, 1, xi_max), kGrid);
}

SampledFunction band_limited(double center, double band, std::uint64_t seed) {
  return random_band_limited(kGrid, center, band, seed);
}

}  // namespace

TEST(BoxOp, IdentityAnnihilationAndTelescoping) {
  const PartitionFamily fam = family(0.5);
  const SampledFunction f = band_limited(1.0, 2.0, 3);
  const std::vector<double> ones(kGrid.size(), 1.0), zeros(kGrid.size(), 0.0);
  EXPECT_LT(max_abs_difference(box_op(f, ones), f), 1e-12);
  EXPECT_EQ(max_abs(box_op(f, zeros)), 0.0);

  const SampledFunction g = band_limited(-9.0, 0.2, 4);
  EXPECT_LT(max_abs(box_op(g, fam, 0)), 1e-15 * max_abs(g) + 1e-300);

  SampledFunction sum = SampledFunction::zeros(kGrid);
  for (int k : fam.lattice().indices()) sum = sum + box_op(f, fam, k);
  EXPECT_LT(max_abs_difference(sum, f), 1e-10);

  const std::vector<double> wrong(16, 1.0);
  EXPECT_THROW(box_op(f, wrong), ConfigError);
}

TEST(AlphaModNorm, SingleWindowSupport) {
  const PartitionFamily fam = family(0.0);
  // Spectrum within |ξ - 2| <= 0.4, inside the plateau of η_2.
  const SampledFunction f = band_limited(2.0, 0.4, 5);
  for (double p : {1.0, 2.0, 3.0}) {
    const SpaceSpec spec{Exponent(p), Exponent(1.0), 1.5, 0.0};
    EXPECT_NEAR(alpha_mod_norm(f, spec, fam).value, std::pow(bracket(2.0), 1.5) * lp_norm(f, Exponent(p)),
                1e-10 * lp_norm(f, Exponent(p)));
  }
}

TEST(AlphaModNorm, L2OracleAndOverlapEquivalence) {
  for (double alpha : {0.0, 0.25, 0.5, 0.75}) {
    const PartitionFamily fam = family(alpha);
    const SampledFunction f = band_limited(2.0, 6.0, 6);
    const SampledFunction F = oracle::naive_forward(f);
    double expect = 0.0;
    for (int k : fam.lattice().indices()) {
      for (std::size_t m = 0; m < F.size(); ++m) {
        const double w = fam.window(k, F.grid().coordinate(m));
        expect += std::norm(w * F[m]) * F.grid().frequency_step();
      }
    }
    const double norm = alpha_mod_norm(f, {Exponent(2.0), Exponent(2.0), 0.0, alpha}, fam).value;
    EXPECT_NEAR(norm, std::sqrt(expect), 1e-9 * norm) << alpha;
    const double l2 = lp_norm(f, Exponent(2.0));
    EXPECT_LE(norm, l2 * (1 + 1e-12));
    EXPECT_GE(norm * std::sqrt(static_cast<double>(fam.max_overlap())), l2 * (1 - 1e-12));
  }
}

TEST(AlphaModNorm, GaussianMatchesNaivePipeline) {
  const PartitionFamily fam = family(0.5);
  const SampledFunction f =
      SampledFunction::sample(kGrid, [](double x) { return std::exp(-std::numbers::pi * x * x); });
  const SampledFunction F = oracle::naive_forward(f);
  double sum = 0.0;
  for (int k : fam.lattice().indices()) {
    std::vector<Complex> v(F.size());
    for (std::size_t m = 0; m < F.size(); ++m) v[m] = fam.window(k, F.grid().coordinate(m)) * F[m];
    const SampledFunction box = oracle::naive_inverse(SampledFunction(F.grid(), std::move(v)));
    sum += std::pow(oracle::riemann_lp(box, 2.0), 2.0);
  }
  const double norm = alpha_mod_norm(f, {Exponent(2.0), Exponent(2.0), 0.0, 0.5}, fam).value;
  EXPECT_NEAR(norm / std::sqrt(sum), 1.0, 1e-6);
}

TEST(AlphaModNorm, CommittedGaussianFixture) {
  const std::filesystem::path dir(AMOD_FIXTURE_DIR);
  std::ifstream in(dir / "gaussian_norm.json");
  ASSERT_TRUE(in.good());
  const auto fx = nlohmann::json::parse(in);
  const SampledFunction f = read_amsf(dir / fx["input"].get<std::string>());
  const auto& c = fx["config"];
  const PartitionFamily fam =
      build_partition(AlphaLattice(c["alpha"], 1, c["Xi_max"]), f.grid(),
                      Profile{c["profile"]["r1"].get<double>(), c["profile"]["r2"].get<double>()});
  const SpaceSpec spec{Exponent(c["space"]["p"].get<double>()), Exponent(c["space"]["q"].get<double>()),
                       c["space"]["s"], c["alpha"]};
  const double expect = fx["norm"];
  EXPECT_NEAR(alpha_mod_norm(f, spec, fam).value / expect, 1.0, 1e-6);
}

TEST(AlphaModNorm, NormAxiomsAndMonotoneInS) {
  const PartitionFamily fam = family(0.5);
  const SampledFunction f = band_limited(0.0, 8.0, 7);
  const SampledFunction g = band_limited(3.0, 4.0, 8);
  for (double p : {1.0, 2.0, 4.0}) {
    for (const Exponent q : {Exponent(1.0), Exponent(2.0), Exponent::infinity()}) {
      const SpaceSpec spec{Exponent(p), q, 0.5, 0.5};
      const double nf = alpha_mod_norm(f, spec, fam).value;
      const double ng = alpha_mod_norm(g, spec, fam).value;
      EXPECT_NEAR(alpha_mod_norm(f.scaled(Complex(-3.0, 4.0)), spec, fam).value, 5.0 * nf, 1e-9 * nf);
      EXPECT_LE(alpha_mod_norm(f + g, spec, fam).value, (nf + ng) * (1 + 1e-9));
      double prev = 0.0;
      for (double s : {-1.0, 0.0, 0.5, 2.0}) {
        const double v = alpha_mod_norm(f, {Exponent(p), q, s, 0.5}, fam).value;
        EXPECT_GE(v, prev);
        prev = v;
      }
    }
  }
  EXPECT_EQ(alpha_mod_norm(SampledFunction::zeros(kGrid), {}, family(0.0)).value, 0.0);
}

TEST(AlphaModNorm, LeakageAndMismatchAreRejected) {
  const PartitionFamily fam = family(0.5, 8.0);
  const SampledFunction wide = band_limited(0.0, 15.0, 9);
  try {
    alpha_mod_norm(wide, {Exponent(2.0), Exponent(2.0), 0.0, 0.5}, fam);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("energy fraction"), std::string::npos);
  }
  const SampledFunction f = band_limited(0.0, 2.0, 9);
  EXPECT_THROW(alpha_mod_norm(f, {Exponent(2.0), Exponent(2.0), 0.0, 0.25}, fam), ConfigError);
}

TEST(BesovNorm, SingleShellAndL2Equivalence) {
  const DyadicFamily d(dyadic_shell_count(kGrid.dual()), kGrid.dual());
  const SampledFunction low = band_limited(0.0, 1.2, 10);
  for (double p : {1.0, 2.0}) {
    const double expect = lp_norm(low, Exponent(p));
    EXPECT_NEAR(besov_norm(low, Exponent(p), Exponent(1.0), 2.0, d).value, expect, 1e-10 * expect);
  }
  const SampledFunction f = band_limited(0.0, 10.0, 11);
  const double l2 = lp_norm(f, Exponent(2.0));
  const double b = besov_norm(f, Exponent(2.0), Exponent(2.0), 0.0, d).value;
  EXPECT_LE(b, l2 * (1 + 1e-12));
  EXPECT_GE(b * std::sqrt(2.0), l2 * (1 - 1e-12));
}

TEST(FmClassNorm, ConstantSymbolGivesWindowNorms) {
  const PartitionFamily fam(AlphaLattice(0.5, 1, 32.0), Profile{});
  const ClassNormResult r = fm_class_norm([](double) { return Complex(1.0); }, 0.0, fam);
  ASSERT_TRUE(r.all_converged());
  double lo = INFINITY;
  for (std::size_t i = 0; i < r.k.size(); ++i) {
    const Interval s = fam.support(r.k[i]);
    const double direct =
        fl1_norm(SpectralFunction{[&](double xi) { return Complex(fam.window(r.k[i], xi)); }, s.lo, s.hi},
                 window_fl1_options({}, fam.lattice().radius(r.k[i])))
            .value;
    EXPECT_NEAR(r.per_k[i], direct, 2e-3 * direct);
    lo = std::min(lo, r.per_k[i]);
  }
  EXPECT_EQ(r.sup, *std::max_element(r.per_k.begin(), r.per_k.end()));
  EXPECT_LT(r.sup / lo, 3.0);

  const ClassNormResult grow = fm_class_norm([](double) { return Complex(1.0); }, 0.5, fam);
  EXPECT_GT(grow.sup, 2.0 * r.sup);
  EXPECT_GT(grow.fitted_slope, 0.5);
}

TEST(FmClassNorm, DecayingSymbolSlope) {
  const double alpha = 0.5, beta = 1.0;
  const PartitionFamily fam(AlphaLattice(alpha, 1, 400.0), Profile{});
  const ClassNormResult r =
      fm_class_norm([&](double xi) { return Complex(std::pow(bracket(xi), beta - 2.0)); }, 0.0, fam);
  const double expect = (beta - 2.0) / (1.0 - alpha);
  EXPECT_NEAR(r.fitted_slope, expect, 0.15 * std::abs(expect));
}

TEST(Mikhlin, ConstantsAndExactCancellation) {
  std::vector<double> pts;
  for (double x = 1.0; x < 1000.0; x *= 1.5) pts.push_back(x);
  const Report c = mikhlin_class_check({[](double) { return -0.7; }, [](double) { return 0.0; }}, 0.0, pts);
  EXPECT_LE(c.scalar("sup0"), 0.7 + 1e-15);
  EXPECT_EQ(c.scalar("member"), 1.0);
  const double w = 1.3;
  const Report e = mikhlin_class_check({[&](double xi) { return std::pow(bracket(xi), -w); }, {}}, w, pts);
  EXPECT_NEAR(e.scalar("sup0"), 1.0, 1e-12);
  EXPECT_LT(e.scalar("sup1"), 1e-8);
  const Report g = mikhlin_class_check({[](double xi) { return std::sin(xi * xi); }, {}}, 0.0, pts);
  EXPECT_EQ(g.scalar("member"), 0.0);
}
