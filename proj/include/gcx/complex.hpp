#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gcx/graph.hpp"
#include "gcx/numeric.hpp"

namespace gcx {

using Simplex = std::vector<int>;

constexpr std::size_t kDefaultSimplexCap = 5'000'000;

/// Simplicial complex in canonical order: by cardinality, then lexicographic.
///
/// dimOffset(d) is the index of the first simplex of dimension d; the block for
/// dimension d ends at dimOffset(d + 1). Vertex labels are kept as given (unit
/// spheres and induced complexes keep the labels of the ambient graph).
class Complex {
 public:
  Complex() : offsets_{0} {}
  // Sorts into canonical order; rejects unsorted simplices, empties and duplicates.
  // Downward closure is the caller's responsibility (see isDownwardClosed).
  explicit Complex(std::vector<Simplex> simplices);

  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  // -1 for the empty complex.
  int dimension() const { return static_cast<int>(offsets_.size()) - 2; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  const Simplex& operator[](std::size_t i) const { return simplices_[i]; }
  std::size_t dimOffset(int d) const;
  std::size_t dimCount(int d) const { return dimOffset(d + 1) - dimOffset(d); }

  // Position of s in the canonical order, or -1.
  std::int64_t indexOf(const Simplex& s) const;
  // Largest vertex label + 1 (0 if empty).
  int vertexBound() const;

  bool operator==(const Complex& o) const { return simplices_ == o.simplices_; }

 private:
  std::vector<Simplex> simplices_;
  std::vector<std::size_t> offsets_;
};

bool canonicalLess(const Simplex& a, const Simplex& b);

Complex cliqueComplex(const Graph& g, std::size_t simplexCap = kDefaultSimplexCap);
// G_n built by the two-term king-configuration recursion, no clique search.
Complex dualCycleComplex(int n, std::size_t simplexCap = kDefaultSimplexCap);
Complex dualPathComplex(int n, std::size_t simplexCap = kDefaultSimplexCap);
Complex unitSphereComplex(const Graph& g, int v, std::size_t simplexCap = kDefaultSimplexCap);
Complex inducedComplex(const Graph& g, const std::vector<int>& w, std::size_t simplexCap = kDefaultSimplexCap);

std::vector<std::int64_t> fVector(const Complex& k);
std::int64_t eulerCharacteristic(const Complex& k);
std::int64_t eulerCharacteristic(const std::vector<std::int64_t>& f);
std::int64_t hyperFibonacci(int n);

std::vector<Simplex> maximalSimplices(const Complex& k);
bool isDownwardClosed(const Complex& k);
// Relabels vertices to 0..m-1 in increasing order of the original labels.
Complex compactLabels(const Complex& k);
// 1-skeleton as a graph on 0..vertexBound()-1.
Graph skeletonGraph(const Complex& k);

// Recursive: -1 for the empty graph, else 1 + average over unit spheres.
Rational inductiveDimension(const Graph& g);
// f'(1)/f(1) for f(t) = 1 + sum f_k t^(k+1), the average simplex cardinality
// with the empty simplex counted.
Rational dimensionExpectation(const Complex& k);

std::string complexToJson(const Complex& k);

}  // namespace gcx
