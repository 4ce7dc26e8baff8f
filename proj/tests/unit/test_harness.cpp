#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "amod/coverings/partition.hpp"
#include "amod/errors.hpp"
#include "amod/harness/counterexample.hpp"
#include "amod/harness/ek.hpp"
#include "amod/harness/families.hpp"
#include "amod/harness/probes.hpp"
#include "amod/spectral/bracket.hpp"

using namespace amod;

TEST(Seeds, DerivedSeedsAreDeterministicAndDistinct) {
  EXPECT_EQ(derive_seed(42, 3), derive_seed(42, 3));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(7, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));

  NormalStream a(9), b(9);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.normal(), b.normal());
}

TEST(Families, LadderAndDeterministicMembers) {
  const auto ladder = modulation_ladder(8.0, 4);
  ASSERT_EQ(ladder.size(), 5u);
  EXPECT_EQ(ladder.front(), 0.0);
  EXPECT_DOUBLE_EQ(ladder.back(), 8.0);
  EXPECT_TRUE(std::is_sorted(ladder.begin(), ladder.end()));
  EXPECT_NEAR(ladder[1], 8.0 * std::pow(2.0, -1.5), 1e-12);

  const Grid g(1, 1024, 32.0, Side::spatial);
  FamilySpec spec;
  spec.kind = FamilyKind::random_band_limited;
  spec.count = 6;
  spec.seed = 12;
  const auto one = make_family(spec, g);
  const auto two = make_family(spec, g);
  ASSERT_EQ(one.size(), 6u);
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].label, two[i].label);
    EXPECT_EQ(max_abs_difference(one[i].f, two[i].f), 0.0);
  }
  EXPECT_GT(max_abs_difference(one[0].f, one[1].f), 0.0);

  spec.kind = FamilyKind::modulated_gaussians;
  spec.reach = 4.0;
  spec.ladder_steps = 3;
  const auto mods = make_family(spec, g);
  EXPECT_EQ(mods.size(), 4u * spec.widths.size());
  EXPECT_EQ(parse_family_kind(to_string(FamilyKind::chirps)), FamilyKind::chirps);
}

TEST(Ek, AlphaZeroMatchesIntervalOracle) {
  const PartitionFamily fam(AlphaLattice(0.0, 1, 400.0), Profile{});
  const double r2 = fam.profile().outer;
  for (double delta : {0.5, 1.0}) {
    for (int k : {0, 1, 3, 7, 12}) {
      const EkGeometry e = ek_index_set(k, delta, fam);
      const double d = std::pow(bracket(k), delta);
      std::vector<int> expect;
      for (int l = -400; l <= 400; ++l) {
        if (l - r2 < d * (k + r2) && d * (k - r2) < l + r2) expect.push_back(l);
      }
      EXPECT_EQ(e.members, expect) << "k " << k << " delta " << delta;
      EXPECT_TRUE(e.enumeration_match);
      EXPECT_EQ(e.count, expect.size());
    }
  }
}

TEST(Ek, OutsideCoveredRegionIsRejected) {
  const PartitionFamily fam(AlphaLattice(0.5, 1, 16.0), Profile{});
  EXPECT_THROW(ek_index_set(3, 1.0, fam), PreconditionError);
}

TEST(Gamma, NearestNeighboursAtAlphaZero) {
  const PartitionFamily fam(AlphaLattice(0.0, 1, 10.0), Profile{});
  EXPECT_EQ(gamma_neighbors(4, fam), (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(gamma_neighbors(10, fam), (std::vector<int>{9, 10}));
  EXPECT_EQ(gamma_sweep(fam, 3).verdict(), Verdict::pass);
  EXPECT_DOUBLE_EQ(convolution_bound(0.0, fam), 3.0);
}

TEST(Probes, LossThreshold) {
  EXPECT_DOUBLE_EQ(loss_threshold(Exponent(1.0), 0.5), 0.5);
  EXPECT_DOUBLE_EQ(loss_threshold(Exponent(4.0), 0.5), 0.25);
  EXPECT_DOUBLE_EQ(loss_threshold(Exponent(2.0), 0.5), 0.0);
  EXPECT_DOUBLE_EQ(loss_threshold(Exponent(1.0), -1.0), 0.0);
  EXPECT_DOUBLE_EQ(loss_threshold(Exponent::infinity(), 1.0), 1.0);
}

TEST(Probes, PlancherelSmallFamily) {
  const Grid g(1, 2048, 64.0, Side::spatial);
  const PartitionFamily fam = build_partition(AlphaLattice(0.5, 1, 16.0), g);
  FamilySpec spec;
  spec.kind = FamilyKind::random_band_limited;
  spec.count = 3;
  spec.reach = 6.0;
  const Report r = plancherel_probe({SymbolSpec::quadratic(1.0), SymbolSpec::bracket_power(1.0, 3.0)},
                                    make_family(spec, g), fam);
  EXPECT_EQ(r.verdict(), Verdict::pass);
  for (double v : r.table("ratios").column("ratio")) EXPECT_NEAR(v, 1.0, 1e-6);
}

TEST(Probes, ConvolutionRatioIsScaleInvariant) {
  const Grid g(1, 2048, 64.0, Side::spatial);
  const PartitionFamily fam = build_partition(AlphaLattice(0.5, 1, 16.0), g);
  const auto pairs = convolution_pairs(g, 2, 6.0, 2.0, 5);
  const SpaceSpec spec{Exponent(1.0), Exponent(2.0), 0.5, 0.5};
  const ConvolutionRatio a = convolution_ratio(pairs[0].first, pairs[0].second, spec, fam);
  const ConvolutionRatio b =
      convolution_ratio(pairs[0].first.scaled(2.0), pairs[0].second.scaled(Complex(0.0, 3.0)), spec, fam);
  EXPECT_NEAR(b.ratio, a.ratio, 1e-10 * a.ratio);
  EXPECT_LE(a.ratio, convolution_bound(0.5, fam) * (1 + 1e-9));
}

TEST(Probes, BernsteinDomainAndPlancherelCase) {
  EXPECT_EQ(bernstein_order(Exponent(1.0)), 1);
  EXPECT_EQ(bernstein_order(Exponent(2.0)), 1);
  const Grid g(1, 2048, 64.0, Side::spatial);
  const auto members = bernstein_family(g.dual(), {1.0, 2.0}, 2, 3);
  EXPECT_THROW(bernstein_ratio(members.front().g, Exponent(3.0)), DomainError);
  for (const auto& m : members) EXPECT_LE(bernstein_ratio(m.g, Exponent(2.0)).ratio, 1.0 + 1e-6);
}

TEST(Counterexample, WideBumpIsRejected) {
  const PartitionFamily fam(AlphaLattice(0.5, 1, 32.0), Profile{});
  EXPECT_THROW(counterexample_h(CompactBump{1.0}, fam), PreconditionError);
  const CompactBump h{0.25};
  EXPECT_EQ(h.value(0.0), 1.0);
  EXPECT_EQ(h.value(0.25), 0.0);
  EXPECT_NEAR(std::abs(h.derivative(h.steepest_point())), h.max_slope(), 1e-12);
}
