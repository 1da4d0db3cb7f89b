#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gcx/complex.hpp"
#include "gcx/hodge.hpp"
#include "gcx/linalg.hpp"

namespace gcx {

constexpr std::size_t kDefaultPairCap = 200'000;
// Direct tuple iteration is only offered below this many simplices.
constexpr std::size_t kDirectTupleSimplexCap = 130;

// f(j,k) = number of ordered intersecting pairs with dim x = j, dim y = k.
I64Matrix fMatrix(const Complex& k);

// Sum over intersecting order-tuples of the product of (-1)^dim. Computed by
// inclusion-exclusion over the common face, so it scales to large complexes.
Integer wuCharacteristic(const Complex& k, int order);
// Literal tuple iteration with intersection pruning; small complexes only.
Integer wuCharacteristicDirect(const Complex& k, int order);
Integer wuFromFMatrix(const I64Matrix& f);

/// Ordered intersecting simplex pairs sorted by |x|+|y|, then (x, y) lexicographically.
/// Pairs are stored as canonical simplex indices.
class PairComplex {
 public:
  // Keeps a reference to k, which must outlive the pair complex.
  PairComplex(const Complex& k, std::size_t pairCap = kDefaultPairCap);

  std::size_t size() const { return pairs_.size(); }
  const std::pair<std::uint32_t, std::uint32_t>& operator[](std::size_t i) const { return pairs_[i]; }
  int minCard() const { return 2; }
  // 0 for an empty complex.
  int maxCard() const { return static_cast<int>(offsets_.size()); }
  // Pairs with total cardinality c occupy [offset(c), offset(c+1)).
  std::size_t offset(int c) const;
  std::size_t count(int c) const { return offset(c + 1) - offset(c); }
  std::int64_t indexOf(std::uint32_t x, std::uint32_t y) const;
  const Complex& base() const { return *k_; }
  // For every simplex: (cofacet index, position of the added vertex).
  const std::vector<std::vector<std::pair<std::uint32_t, int>>>& cofacets() const { return cofacets_; }

 private:
  const Complex* k_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
  std::vector<std::size_t> offsets_;  // offsets_[c-2], c = 2..maxCard+1
  std::vector<std::vector<std::pair<std::uint32_t, int>>> cofacets_;
};

// Coboundary from cardinality c to c+1: column = pair of cardinality c (local index),
// rows = pairs of cardinality c+1. Adding a vertex to x at position i has sign (-1)^i,
// adding to y at position j has sign (-1)^(|x|+j).
SparseMatrix wuDifferential(const PairComplex& p, int c, const Orientation* orientation = nullptr);
void checkWuDSquaredZero(const PairComplex& p);
// Indexed by total cardinality 2..maxCard.
std::vector<std::int64_t> wuBetti(const Complex& k, std::size_t pairCap = kDefaultPairCap,
                                  const Orientation* orientation = nullptr);

// Sum over fixed intersecting pairs of i_T(x) i_T(y).
std::int64_t wuLefschetz(const Complex& k, const std::vector<int>& perm);
// Super trace of T on the harmonic pair forms (small complexes).
std::int64_t wuLefschetzViaCohomology(const Complex& k, const std::vector<int>& perm,
                                      std::size_t denseCap = kDefaultDenseCap);

// Wu curvature K(v) = sum over intersecting (x, y), v in x, of w(x)w(y)/|x|.
std::vector<Rational> wuCurvature(const Complex& k);

I64Matrix connectionMatrix(const Complex& k);
struct ConnectionReport {
  Integer det;
  int positive = 0;
  int negative = 0;
  int signature = 0;
  std::int64_t oddSimplices = 0;
  std::int64_t energySum = 0;  // sum of the entries of the inverse
  bool exactInertiaUsed = false;
};
ConnectionReport connectionReport(const Complex& k, std::size_t denseCap = kDefaultDenseCap);

// entry = 2^|x∩y| - 1 (default) or |x∩y|.
enum class CountingReading { SubsimplexCount, VertexCount };
I64Matrix countingMatrix(const Complex& k, CountingReading reading = CountingReading::SubsimplexCount);
struct CountingReport {
  double minEigenvalue = 0;
  bool positiveDefinite = false;
  double isospectralDeviation = 0;  // sup |lambda_i - 1/lambda_(n-1-i)|
};
CountingReport countingReport(const Complex& k, CountingReading reading = CountingReading::SubsimplexCount,
                              std::size_t denseCap = kDefaultDenseCap);

// |H| = (|d| + |d|^T)^2 against L - L^{-1} for complexes of dimension <= 1.
bool hydrogenCheck(const Complex& k);

}  // namespace gcx
