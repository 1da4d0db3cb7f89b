#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

#include "gcx/complex.hpp"
#include "gcx/errors.hpp"

using namespace gcx;

TEST(Complex, CanonicalOrder) {
  Complex k({{1, 2}, {0}, {2}, {1}, {0, 1}});
  EXPECT_EQ(k[0], (Simplex{0}));
  EXPECT_EQ(k[3], (Simplex{0, 1}));
  EXPECT_EQ(k.dimOffset(1), 3u);
  EXPECT_EQ(k.indexOf({1, 2}), 4);
  EXPECT_EQ(k.indexOf({0, 2}), -1);
  EXPECT_THROW(Complex({{1, 0}}), InvalidArgument);
  EXPECT_THROW(Complex({{0}, {0}}), InvalidArgument);
}

TEST(Complex, CliqueComplexOfK4) {
  auto k = cliqueComplex(completeGraph(4));
  EXPECT_EQ(fVector(k), (std::vector<std::int64_t>{4, 6, 4, 1}));
  EXPECT_EQ(eulerCharacteristic(k), 1);
  EXPECT_TRUE(isDownwardClosed(k));
}

TEST(Complex, SimplexCap) {
  EXPECT_THROW(cliqueComplex(completeGraph(12), 100), BoundExceeded);
  EXPECT_THROW(dualCycleComplex(40, 1000), BoundExceeded);
  EXPECT_THROW(dualPathComplex(40, 1000), BoundExceeded);
}

TEST(Complex, KingRecursionMatchesCliques) {
  for (int n = 4; n <= 16; ++n) {
    EXPECT_EQ(dualCycleComplex(n), cliqueComplex(cycleComplement(n))) << n;
    EXPECT_EQ(dualPathComplex(n), cliqueComplex(pathComplement(n))) << n;
  }
}

TEST(Complex, HyperFibonacci) {
  EXPECT_EQ(hyperFibonacci(0), 1);
  EXPECT_EQ(hyperFibonacci(1), 0);
  EXPECT_EQ(hyperFibonacci(7), 28);
  EXPECT_EQ(hyperFibonacci(11), 198);
  for (int n = 4; n <= 24; ++n) EXPECT_EQ(static_cast<std::int64_t>(dualCycleComplex(n).size()), hyperFibonacci(n));
  EXPECT_EQ(dualCycleComplex(24).size(), 103681u);
}

TEST(Complex, FVectorOfG11) {
  EXPECT_EQ(fVector(dualCycleComplex(11)), (std::vector<std::int64_t>{11, 44, 77, 55, 11}));
}

TEST(Complex, EulerPeriodicity) {
  const int cyc[6] = {-1, 0, 2, 3, 2, 0};  // 1 - 2cos(pi n/3) at n mod 6
  const int pth[6] = {0, 1, 2, 2, 1, 0};   // n mod 6 = 0..5
  for (int n = 4; n <= 30; ++n) {
    EXPECT_EQ(eulerCharacteristic(dualCycleComplex(n)), cyc[n % 6]) << n;
    EXPECT_EQ(eulerCharacteristic(dualPathComplex(n)), pth[n % 6]) << n;
  }
}

TEST(Complex, MaximalDimension) {
  for (int n = 6; n <= 18; ++n) EXPECT_EQ(dualCycleComplex(n).dimension(), n / 2 - 1);
}

TEST(Complex, FacetCensusIsComputed) {
  // odd n: the n maximal (n-1)/2-cliques; even n: two top simplices, possibly more
  for (int n = 7; n <= 15; n += 2) {
    auto facets = maximalSimplices(dualCycleComplex(n));
    int top = 0;
    for (auto& f : facets)
      if (static_cast<int>(f.size()) == (n - 1) / 2) ++top;
    EXPECT_EQ(top, n);
  }
  for (int n = 6; n <= 16; n += 2) {
    auto facets = maximalSimplices(dualCycleComplex(n));
    int top = 0;
    for (auto& f : facets)
      if (static_cast<int>(f.size()) == n / 2) ++top;
    EXPECT_EQ(top, 2);
  }
}

TEST(Complex, UnitSpheresKeepLabels) {
  auto g = cycleComplement(8);
  auto s = unitSphereComplex(g, 0);
  for (const auto& x : s.simplices())
    for (int v : x) EXPECT_TRUE(g.adjacent(0, v));
  // unit spheres of G_n are G_{n-3}^+
  for (int n = 6; n <= 12; ++n)
    EXPECT_EQ(fVector(unitSphereComplex(cycleComplement(n), 0)), fVector(dualPathComplex(n - 3)));
}

TEST(Complex, DimensionNotions) {
  EXPECT_EQ(inductiveDimension(completeGraph(4)), Rational(3));
  EXPECT_EQ(inductiveDimension(cycleGraph(5)), Rational(1));
  EXPECT_EQ(inductiveDimension(Graph(0)), Rational(-1));
  EXPECT_EQ(2 * dimensionExpectation(dualCycleComplex(4)) - 1, Rational(9, 7));
  // equality for complete graphs
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(inductiveDimension(completeGraph(n)), 2 * dimensionExpectation(cliqueComplex(completeGraph(n))) - 1);
  const auto& ref = test::reference();
  for (int n = 4; n <= 14; ++n) {
    auto row = ref["dims_cycle"][std::to_string(n)];
    EXPECT_NEAR(toDouble(inductiveDimension(cycleComplement(n))), row[0].get<double>(), 5e-5) << n;
    EXPECT_NEAR(toDouble(2 * dimensionExpectation(dualCycleComplex(n)) - 1), row[1].get<double>(), 5e-5) << n;
    auto prow = ref["dims_path"][std::to_string(n)];
    EXPECT_NEAR(toDouble(inductiveDimension(pathComplement(n))), prow[0].get<double>(), 5e-5) << n;
    EXPECT_NEAR(toDouble(2 * dimensionExpectation(dualPathComplex(n)) - 1), prow[1].get<double>(), 5e-5) << n;
  }
}

TEST(Complex, InductiveDimensionBound) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto g = test::randomGraph(rng, 1, 9);
    EXPECT_LE(inductiveDimension(g), 2 * dimensionExpectation(cliqueComplex(g)) - 1);
  }
}

TEST(Complex, Json) {
  EXPECT_EQ(complexToJson(cliqueComplex(pathGraph(2))), "[[0],[1],[0,1]]");
}
