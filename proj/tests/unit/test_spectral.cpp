#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "amod/coverings/partition.hpp"
#include "amod/errors.hpp"
#include "amod/spectral/amsf.hpp"
#include "amod/spectral/bracket.hpp"
#include "amod/spectral/exponent.hpp"
#include "amod/spectral/fourier.hpp"
#include "amod/spectral/norms.hpp"
#include "amod/spectral/parallel.hpp"
#include "oracles.hpp"

using namespace amod;

namespace {

SampledFunction random_spatial(const Grid& g, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  std::vector<Complex> v(g.size());
  for (auto& z : v) z = Complex(n(rng), n(rng));
  return SampledFunction(g.with_side(Side::spatial), std::move(v));
}

double gaussian(double x) { return std::exp(-std::numbers::pi * x * x); }

}  // namespace

TEST(Grid, SamplePointsAndSpacings) {
  const Grid g(1, 8, 4.0, Side::spatial);
  EXPECT_DOUBLE_EQ(g.coordinate(0), -2.0);
  EXPECT_DOUBLE_EQ(g.coordinate(7), 1.5);
  const Grid f = g.dual();
  EXPECT_EQ(f.side(), Side::frequency);
  EXPECT_DOUBLE_EQ(f.coordinate(0), -1.0);
  EXPECT_DOUBLE_EQ(f.coordinate(4), 0.0);
  EXPECT_DOUBLE_EQ(g.spatial_step() * g.frequency_step() * 8.0, 1.0);
}

TEST(Grid, RejectsBadShapes) {
  EXPECT_THROW(Grid(1, 12, 1.0, Side::spatial), ConfigError);
  EXPECT_THROW(Grid(3, 8, 1.0, Side::spatial), ConfigError);
  EXPECT_THROW(Grid(1, 8, -1.0, Side::spatial), ConfigError);
}

TEST(Bracket, Values) {
  EXPECT_DOUBLE_EQ(bracket(0.0), 1.0);
  EXPECT_DOUBLE_EQ(bracket(std::sqrt(3.0)), 2.0);
  const std::vector<double> v{1.0, 1.0, 1.0};
  EXPECT_DOUBLE_EQ(bracket(v), 2.0);
  EXPECT_LT(bracket(1.0), bracket(1.5));
}

TEST(Exponent, ParseAndReciprocal) {
  EXPECT_TRUE(Exponent::parse("inf").is_infinite());
  EXPECT_EQ(Exponent::infinity().reciprocal(), 0.0);
  EXPECT_DOUBLE_EQ(Exponent::parse("4").reciprocal(), 0.25);
  EXPECT_THROW(Exponent(0.5), DomainError);
}

TEST(Fourier, MatchesNaiveDftOracle) {
  const Grid g(1, 256, 16.0, Side::spatial);
  const SampledFunction f = random_spatial(g, 3);
  const double err = max_abs_difference(fourier_forward(f), oracle::naive_forward(f));
  EXPECT_LT(err, 1e-9);
  const SampledFunction h = random_spatial(g, 4);
  const SampledFunction hf(g.with_side(Side::frequency), {h.values().begin(), h.values().end()});
  EXPECT_LT(max_abs_difference(fourier_inverse(hf), oracle::naive_inverse(hf)), 1e-9);
}

TEST(Fourier, TwoDimensionalMatchesSeparableSum) {
  const Grid g(2, 16, 4.0, Side::spatial);
  const SampledFunction f = random_spatial(g, 5);
  const SampledFunction F = fourier_forward(f);
  const Grid fg = g.with_side(Side::frequency);
  double err = 0.0;
  for (std::size_t m = 0; m < fg.size(); m += 7) {
    const Point xi = fg.point(m);
    Complex acc = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      const Point x = g.point(j);
      acc += f[j] * std::polar(1.0, -2.0 * std::numbers::pi * (x[0] * xi[0] + x[1] * xi[1]));
    }
    err = std::max(err, std::abs(acc * g.cell_volume() - F[m]));
  }
  EXPECT_LT(err, 1e-9);
}

TEST(Fourier, ConstantMapsToDcBin) {
  const Grid g(1, 64, 8.0, Side::spatial);
  const SampledFunction one = SampledFunction::sample(g, [](double) { return 1.0; });
  const SampledFunction F = fourier_forward(one);
  for (std::size_t m = 0; m < F.size(); ++m) {
    const double expect = F.grid().frequency_label(m) == 0 ? 8.0 : 0.0;
    EXPECT_NEAR(std::abs(F[m] - Complex(expect)), 0.0, 1e-12);
  }
  EXPECT_LT(max_abs_difference(fourier_inverse(F), one), 1e-12);
}

TEST(Fourier, GaussianIsSelfDual) {
  const Grid g(1, 1024, 32.0, Side::spatial);
  const SampledFunction f = SampledFunction::sample(g, gaussian);
  const SampledFunction F = fourier_forward(f);
  const SampledFunction expect = SampledFunction::sample(F.grid(), gaussian);
  EXPECT_LT(max_abs_difference(F, expect), 1e-10);
  EXPECT_LT(max_abs_difference(fourier_inverse(expect), f), 1e-10);
}

TEST(Fourier, ParsevalAndRoundTrip) {
  const Grid g(1, 512, 10.0, Side::spatial);
  const SampledFunction f = random_spatial(g, 11);
  const SampledFunction F = fourier_forward(f);
  double sx = 0.0, sf = 0.0;
  for (const auto& v : f.values()) sx += std::norm(v);
  for (const auto& v : F.values()) sf += std::norm(v);
  sx *= g.spatial_step();
  sf *= g.frequency_step();
  EXPECT_LT(std::abs(sx - sf) / sx, 1e-12);
  EXPECT_LT(max_abs_difference(fourier_inverse(F), f), 1e-12 * max_abs(f));
}

TEST(Fourier, WrongSideIsRejected) {
  const Grid g(1, 16, 1.0, Side::spatial);
  EXPECT_THROW(fourier_inverse(SampledFunction::zeros(g)), ConfigError);
  EXPECT_THROW(fourier_forward(SampledFunction::zeros(g.dual())), ConfigError);
}

TEST(LpNorm, ConstantGaussianAndHomogeneity) {
  const Grid g(1, 256, 16.0, Side::spatial);
  const SampledFunction c = SampledFunction::sample(g, [](double) { return -3.0; });
  for (double p : {1.0, 2.0, 3.5}) EXPECT_NEAR(lp_norm(c, Exponent(p)), 3.0 * std::pow(16.0, 1.0 / p), 1e-11);
  EXPECT_DOUBLE_EQ(lp_norm(c, Exponent::infinity()), 3.0);

  const SampledFunction gs = SampledFunction::sample(g, gaussian);
  EXPECT_DOUBLE_EQ(lp_norm(gs, Exponent::infinity()), 1.0);
  EXPECT_NEAR(lp_norm(gs, Exponent(1.0)), 1.0, 1e-10);
  EXPECT_NEAR(lp_norm(gs, Exponent(3.0)), oracle::riemann_lp(gs, 3.0), 1e-13);

  const SampledFunction r = random_spatial(g, 2);
  for (double p : {1.0, 1.5, 2.0, 4.0}) {
    EXPECT_NEAR(lp_norm(r.scaled(Complex(0.0, -2.5)), Exponent(p)), 2.5 * lp_norm(r, Exponent(p)),
                1e-12 * lp_norm(r, Exponent(p)));
  }
}

TEST(Fl1Norm, TentGaussianAndSupBound) {
  const SpectralFunction tent{[](double xi) { return Complex(std::max(0.0, 1.0 - std::abs(xi))); }, -1.0, 1.0};
  const Fl1Result t = fl1_norm(tent);
  EXPECT_NEAR(t.value, 1.0, 2e-3);
  const SpectralFunction gs{[](double xi) { return Complex(gaussian(xi)); }, -4.0, 4.0};
  const Fl1Result r = fl1_norm(gs);
  EXPECT_NEAR(r.value, 1.0, 1e-8);
  ASSERT_TRUE(r.converged.has_value());
  EXPECT_TRUE(*r.converged);

  const Grid fg(1, 512, 32.0, Side::frequency);
  const SampledFunction s = SampledFunction::sample(fg, [](double xi) { return gaussian(xi) * std::cos(3.0 * xi); });
  const double v = fl1_norm(s).value;
  for (std::size_t m = 0; m < s.size(); ++m) EXPECT_GE(v + 1e-12, std::abs(s[m]));
}

TEST(Fl1Norm, WindowStableUnderRefinement) {
  const PartitionFamily fam(AlphaLattice(0.5, 1, 8.0), Profile{});
  auto window_fl1 = [&](std::size_t n, double l) {
    const Grid fg(1, n, l, Side::frequency);
    return fl1_norm(SampledFunction::sample(fg, [&](double xi) { return fam.window(0, xi); })).value;
  };
  const double coarse = window_fl1(1024, 32.0);
  const double fine = window_fl1(2048, 64.0);
  EXPECT_LT(std::abs(fine - coarse) / fine, 0.01);
}

TEST(Amsf, RoundTripBothLayouts) {
  const auto dir = std::filesystem::temp_directory_path() / "amod_amsf_test";
  std::filesystem::create_directories(dir);
  const Grid g(1, 64, 3.0, Side::frequency);
  const SampledFunction f = random_spatial(g, 8);
  const SampledFunction ff(g, {f.values().begin(), f.values().end()});
  for (auto layout : {AmsfLayout::embedded, AmsfLayout::sibling}) {
    const auto path = dir / (layout == AmsfLayout::embedded ? "e.amsf" : "s.amsf");
    write_amsf(path, ff, layout);
    const SampledFunction back = read_amsf(path);
    EXPECT_EQ(back.grid(), ff.grid());
    EXPECT_EQ(max_abs_difference(back, ff), 0.0);
  }
  std::ifstream in(dir / "e.amsf", std::ios::binary);
  std::string header;
  std::getline(in, header);
  EXPECT_NE(header.find("\"magic\":\"AMSF1\""), std::string::npos);
  EXPECT_NE(header.find("f64-interleaved"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Amsf, RejectsBadMagicAndTruncation) {
  std::stringstream bad("{\"magic\":\"XXX\",\"n\":1,\"N\":4,\"L\":1,\"side\":\"spatial\",\"dtype\":\"f64-interleaved\"}\n");
  EXPECT_THROW(read_amsf(bad), ConfigError);
  std::stringstream shorty("{\"magic\":\"AMSF1\",\"n\":1,\"N\":4,\"L\":1,\"side\":\"spatial\",\"dtype\":\"f64-interleaved\"}\nabc");
  EXPECT_THROW(read_amsf(shorty), ConfigError);
}

TEST(Parallel, EveryIndexOnceAndExceptionsPropagate) {
  parallel::set_thread_count(4);
  std::vector<std::atomic<int>> hits(1000);
  parallel::for_each_index(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel::for_each_index(10, [](std::size_t i) {
                 if (i == 7) throw DomainError("boom");
               }),
               DomainError);
  parallel::set_thread_count(0);
}
