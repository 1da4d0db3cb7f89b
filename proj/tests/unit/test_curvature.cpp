#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

#include "gcx/complex.hpp"
#include "gcx/curvature.hpp"
#include "gcx/errors.hpp"
#include "gcx/polynomial.hpp"

using namespace gcx;

TEST(Curvature, CompleteGraph) {
  // K(v) on K_n is 1/n
  for (int n = 1; n <= 6; ++n)
    for (auto& k : curvatureProfile(completeGraph(n)).values) EXPECT_EQ(k, Rational(1, n));
}

TEST(Curvature, PathComplement12) {
  auto values = curvatureProfile(pathComplement(12)).values;
  std::vector<Rational> expected;
  for (auto& s : test::reference()["curvature_path12"]) expected.push_back(parseFraction(s.get<std::string>()));
  std::sort(values.begin(), values.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(values, expected);
}

TEST(Curvature, FastFormula) {
  for (int n = 5; n <= 14; ++n) {
    auto direct = curvatureProfile(pathComplement(n)).values;
    EXPECT_EQ(fastPathCurvatures(n), direct) << n;
    for (int k = 1; k <= n; ++k) EXPECT_EQ(fastPathCurvature(n, k), direct[k - 1]);
  }
}

TEST(Curvature, ConstantOnCycleComplements) {
  for (int n = 5; n <= 12; ++n) {
    auto p = curvatureProfile(cycleComplement(n));
    for (auto& k : p.values) EXPECT_EQ(k, Rational(eulerCharacteristic(dualCycleComplex(n)), n));
  }
}

TEST(Curvature, CurvatureFunctionsSumToGeneratingFunction) {
  auto g = cycleComplement(8);
  auto p = curvatureProfile(g, true);
  RationalPoly sum;
  for (auto& f : p.functions) sum += f;
  EXPECT_EQ(sum + RationalPoly({1}), generatingFunction(dualCycleComplex(8)));
}

TEST(Curvature, PoincareHopf) {
  auto g = cycleComplement(7);
  std::vector<std::int64_t> f{5, 1, 3, 0, 6, 2, 4};
  auto idx = poincareHopfIndices(g, f);
  std::int64_t s = 0;
  for (auto i : idx) s += i;
  EXPECT_EQ(s, eulerCharacteristic(dualCycleComplex(7)));
  EXPECT_TRUE(functionalPoincareHopf(g, f).holds());
  EXPECT_THROW(poincareHopfIndices(g, {1, 1, 2, 3, 4, 5, 6}), InvalidArgument);
}

TEST(Curvature, IndexExpectationIsCurvature) {
  auto g = pathComplement(7);
  EXPECT_EQ(indexExpectation(g), curvatureProfile(g).values);
}

TEST(Curvature, MorseFiltration) {
  auto idx = morseFiltrationIndices(14);
  std::vector<std::int64_t> expected{1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0, 1, 1};
  EXPECT_EQ(idx, expected);
  std::int64_t s = 0;
  for (int m = 1; m <= 14; ++m) {
    s += idx[m - 1];
    if (m >= 1) EXPECT_EQ(s, eulerCharacteristic(dualPathComplex(m))) << m;
  }
}

TEST(Curvature, PrimeGraphMertens) {
  for (int n : {10, 30, 50}) {
    EXPECT_EQ(eulerCharacteristic(cliqueComplex(primeGraph(n))), 1 - mertens(n)) << n;
  }
}

TEST(Curvature, Renormalization) {
  auto pts = renormalizationSample(60, 1);
  EXPECT_EQ(pts.front().k, 1);
  EXPECT_EQ(pts.size(), 10u);
  Rational total = 0;
  for (auto& k : fastPathCurvatures(60)) total += k;
  EXPECT_EQ(total, 1 - jacobsthalPath(60).evaluate(Rational(-1)));
  EXPECT_THROW(renormalizationSample(60, 6), InvalidArgument);
}
