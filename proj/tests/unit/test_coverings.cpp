#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "amod/coverings/dyadic.hpp"
#include "amod/coverings/partition.hpp"
#include "amod/coverings/profile.hpp"
#include "amod/coverings/verify.hpp"
#include "amod/errors.hpp"

using namespace amod;

TEST(Smoothstep, EndpointsSymmetryAndMonotone) {
  EXPECT_EQ(smoothstep(0.0), 0.0);
  EXPECT_EQ(smoothstep(1.0), 1.0);
  EXPECT_DOUBLE_EQ(smoothstep(0.5), 0.5);
  double prev = 0.0;
  for (int i = 1; i < 100; ++i) {
    const double t = i / 100.0;
    EXPECT_NEAR(smoothstep(t) + smoothstep(1.0 - t), 1.0, 1e-15);
    EXPECT_GE(smoothstep(t), prev);
    prev = smoothstep(t);
    const double h = 1e-6;
    EXPECT_NEAR(smoothstep_derivative(t), (smoothstep(t + h) - smoothstep(t - h)) / (2 * h), 1e-6);
  }
}

TEST(Profile, PlateauAndSupport) {
  const Profile g;
  EXPECT_EQ(g(0.0), 1.0);
  EXPECT_EQ(g(0.45), 1.0);
  EXPECT_EQ(g(0.55), 0.0);
  EXPECT_EQ(g(-0.7), 0.0);
  EXPECT_GT(g(0.549), 0.0);
  EXPECT_THROW((Profile{0.6, 0.5}.validate()), ConfigError);
  const Cutoff c{2.0};
  EXPECT_EQ(c(2.0), 1.0);
  EXPECT_EQ(c(4.0), 0.0);
  EXPECT_GT(c(3.9), 0.0);
}

TEST(AlphaLattice, UnitLatticeAtAlphaZero) {
  const AlphaLattice lat(0.0, 1, 10.0);
  EXPECT_EQ(lat.max_index(), 10);
  EXPECT_EQ(lat.size(), 21u);
  for (int k : lat.indices()) {
    EXPECT_DOUBLE_EQ(lat.center(k), k);
    EXPECT_DOUBLE_EQ(lat.radius(k), 1.0);
  }
}

TEST(AlphaLattice, CentersAndRadii) {
  for (double a : {0.0, 0.25, 0.5, 0.75}) {
    const AlphaLattice lat(a, 1, 20.0);
    EXPECT_EQ(lat.center(0), 0.0);
    EXPECT_EQ(lat.radius(0), 1.0);
  }
  const AlphaLattice half(0.5, 1, 20.0);
  EXPECT_NEAR(half.center(3), 3.0 * std::sqrt(10.0), 1e-13);
  EXPECT_NEAR(half.center(3), 9.4868330, 1e-7);
  EXPECT_NEAR(half.radius(3), std::sqrt(10.0), 1e-13);
  for (double xi : {-17.0, -2.5, 0.0, 0.3, 11.0}) EXPECT_NEAR(half.center(half.kappa(xi)), xi, 1e-12);
}

TEST(AlphaLattice, IndexSetMatchesBruteForce) {
  const AlphaLattice lat(0.5, 1, 200.0);
  int count = 0;
  for (int k = -1000; k <= 1000; ++k) {
    if (std::abs(std::hypot(1.0, k) * k) <= 200.0) ++count;
  }
  EXPECT_EQ(static_cast<int>(lat.size()), count);
}

TEST(AlphaLattice, RejectsDyadicEndpointAndBadInput) {
  EXPECT_THROW(AlphaLattice(1.0, 1, 8.0), ConfigError);
  EXPECT_THROW(AlphaLattice(0.5, 2, 8.0), ConfigError);
  EXPECT_THROW(AlphaLattice(0.5, 1, -1.0), ConfigError);
}

TEST(Partition, TwoWindowSymmetryAtAlphaZero) {
  const PartitionFamily fam(AlphaLattice(0.0, 1, 8.0), Profile{});
  EXPECT_DOUBLE_EQ(fam.window(0, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(fam.window(1, 0.5), 0.5);
  EXPECT_EQ(fam.window(0, 0.0), 1.0);
}

TEST(Partition, SumsToOneAndExactSupport) {
  std::mt19937_64 rng(17);
  for (double a : {0.0, 0.25, 0.5, 0.75}) {
    const PartitionFamily fam(AlphaLattice(a, 1, 16.0), Profile{});
    std::uniform_real_distribution<double> u(-fam.covered_radius(), fam.covered_radius());
    for (int i = 0; i < 500; ++i) {
      const double xi = u(rng);
      double sum = 0.0;
      for (int k : fam.lattice().indices()) {
        const double v = fam.window(k, xi);
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
        sum += v;
        const Interval s = fam.support(k);
        if (!s.contains(xi)) EXPECT_EQ(v, 0.0);
      }
      EXPECT_NEAR(sum, 1.0, 1e-12) << "alpha " << a << " xi " << xi;
    }
  }
}

TEST(Partition, SampledWindowsVanishOutsideSupport) {
  const Grid g(1, 2048, 64.0, Side::frequency);
  const PartitionFamily fam = build_partition(AlphaLattice(0.5, 1, 16.0), g);
  for (int k : fam.lattice().indices()) {
    const auto w = fam.dense_window(k);
    const Interval s = fam.support(k);
    for (std::size_t m = 0; m < w.size(); ++m) {
      if (!s.contains(g.coordinate(m))) EXPECT_EQ(w[m], 0.0);
    }
  }
}

TEST(Partition, ProfileWithoutCoveringIsRejected) {
  EXPECT_THROW(PartitionFamily(AlphaLattice(0.0, 1, 8.0), Profile{0.1, 0.2}), ConstructionError);
}

TEST(Partition, GridMustReachXiMax) {
  try {
    build_partition(AlphaLattice(0.9, 1, 50.0), Grid(1, 2048, 64.0, Side::frequency));
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("grid too coarse"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("need N >= 8192"), std::string::npos);
  }
}

TEST(VerifyPartition, AlphaZeroWindowsAreTranslates) {
  const PartitionFamily fam = build_partition(AlphaLattice(0.0, 1, 16.0), Grid(1, 2048, 64.0, Side::frequency));
  const Report r = verify_partition(fam);
  EXPECT_EQ(r.verdict(), Verdict::pass);
  const auto fl1 = r.table("windows").column("fl1");
  for (double v : fl1) EXPECT_NEAR(v, fl1.front(), 1e-10);
}

TEST(VerifyPartition, PassesForAllAlphasAndIsStableUnderDoubling) {
  for (double a : {0.25, 0.5, 0.75}) {
    const PartitionFamily fam = build_partition(AlphaLattice(a, 1, 16.0), Grid(1, 2048, 64.0, Side::frequency));
    const Report r = verify_partition(fam);
    EXPECT_EQ(r.verdict(), Verdict::pass) << a;
    EXPECT_LT(r.scalar("sum_deviation"), 1e-8);
    const PartitionFamily big = build_partition(AlphaLattice(a, 1, 32.0), Grid(1, 4096, 64.0, Side::frequency));
    const Report rb = verify_partition(big);
    double sup = 0.0, sup_big = 0.0;
    for (double v : r.table("windows").column("fl1")) sup = std::max(sup, v);
    for (double v : rb.table("windows").column("fl1")) sup_big = std::max(sup_big, v);
    EXPECT_LT(std::abs(sup_big / sup - 1.0), 0.01) << a;
  }
}

TEST(VerifyPartition, CoarseGridIsAPreconditionError) {
  const PartitionFamily fam = build_partition(AlphaLattice(0.0, 1, 8.0), Grid(1, 64, 4.0, Side::frequency));
  EXPECT_THROW(verify_partition(fam), PreconditionError);
}

TEST(Dyadic, PlateauTelescopingAndShellSupport) {
  const Grid g(1, 1024, 32.0, Side::frequency);
  const DyadicFamily d(3, g);
  EXPECT_EQ(DyadicFamily::bump(4.0 / 3.0), 1.0);
  EXPECT_EQ(DyadicFamily::bump(1.5), 0.0);
  for (std::size_t m = 0; m < g.size(); ++m) {
    const double xi = g.coordinate(m);
    if (std::abs(xi) <= 4.0 / 3.0) EXPECT_EQ(d.window(0)[m], 1.0);
    if (std::abs(xi) <= d.covered_radius()) {
      double s = 0.0;
      for (int j = 0; j <= 3; ++j) s += d.window(j)[m];
      EXPECT_NEAR(s, 1.0, 1e-14);
    }
    if (std::abs(xi) < 4.0 / 3.0 || std::abs(xi) > 6.0) EXPECT_EQ(d.window(2)[m], 0.0);
  }
  double s = 0.0;
  for (int j = 0; j <= 3; ++j) s += DyadicFamily::shell(j, 4.0);
  EXPECT_NEAR(s, 1.0, 1e-15);
  EXPECT_THROW(DyadicFamily(6, g), ConfigError);
}
