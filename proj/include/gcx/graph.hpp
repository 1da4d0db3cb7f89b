#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcx/numeric.hpp"

namespace gcx {

/// Finite simple graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted and symmetric; the constructors below
/// reject loops and out-of-range endpoints. Values are immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertexCount() const { return static_cast<int>(adj_.size()); }
  std::size_t edgeCount() const;
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  // Construction metadata ("family" plus named integer parameters); display only.
  const std::string& family() const { return family_; }
  const std::map<std::string, std::string>& parameters() const { return params_; }
  Graph& withMetadata(std::string family, std::map<std::string, std::string> params);

  // Original labels for families whose vertices are not 0..n-1 (e.g. the prime graph).
  const std::vector<std::int64_t>& labels() const { return labels_; }
  Graph& withLabels(std::vector<std::int64_t> labels);

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::string family_;
  std::map<std::string, std::string> params_;
  std::vector<std::int64_t> labels_;
};

Graph completeGraph(int n);
Graph edgelessGraph(int n);
Graph cycleGraph(int n);
Graph pathGraph(int n);
Graph starGraph(int spikes);
Graph wheelGraph(int rim);
Graph hypercubeGraph(int dim);
Graph complement(const Graph& g);
Graph disjointUnion(const Graph& a, const Graph& b);
Graph zykovJoin(const Graph& a, const Graph& b);
Graph inducedSubgraph(const Graph& g, const std::vector<int>& vertices);

// Circulant graph Ci_n(gens); generators are closed under negation mod n.
Graph circulantGraph(int n, const std::vector<int>& gens);
// Complement of the Cayley graph of the dihedral group of order 2n
// (generators: rotation, its inverse, a reflection).
Graph dihedralCayleyGraph(int n);
Graph dihedralCayleyComplement(int n);
Graph paleyGraph(int q);
// Square-free integers in [2, n], joined when one divides the other.
Graph primeGraph(int n);
// Vertices: simplices of the clique complex; edges: strict containment.
Graph barycentricRefinement(const Graph& g);

// G_n: complement of the n-cycle (edgeless on n vertices for n < 3).
Graph cycleComplement(int n);
// G_n^+: complement of the n-vertex path (empty graph for n <= 0).
Graph pathComplement(int n);

bool isPrime(std::int64_t q);
int mobius(std::int64_t k);
std::int64_t mertens(std::int64_t n);

bool isConnected(const Graph& g);
std::vector<std::vector<int>> connectedComponents(const Graph& g);
bool isForest(const Graph& g);

// Distance matrix by BFS; -1 marks unreachable pairs.
std::vector<std::vector<int>> distanceMatrix(const Graph& g);

struct MetricInvariants {
  // Distance invariants are empty when the graph is disconnected ("infinite").
  std::optional<int> diameter;
  std::optional<std::int64_t> wiener;
  std::optional<Rational> harary;
  std::vector<int> degreeSequence;  // non-increasing
  bool allDegreesEven = false;
  bool clawFree = false;
  // Exact-search invariants are absent when n exceeds the search bound.
  std::optional<int> independenceNumber;
  std::optional<int> cliqueNumber;
  std::optional<int> chromaticNumber;
};

constexpr int kDefaultExactSearchBound = 20;

MetricInvariants metricInvariants(const Graph& g, int exactSearchBound = kDefaultExactSearchBound);

int independenceNumber(const Graph& g, int bound = kDefaultExactSearchBound);
int cliqueNumber(const Graph& g, int bound = kDefaultExactSearchBound);
int chromaticNumber(const Graph& g, int bound = kDefaultExactSearchBound);
bool isClawFree(const Graph& g);
bool isStronglyRegular(const Graph& g);

// Closed Hamiltonian walk x_k = k*a mod n on G_n for the smallest admissible a.
std::optional<std::vector<int>> cycleComplementHamiltonianWitness(int n);
bool isHamiltonianCycle(const Graph& g, const std::vector<int>& order);
// Exact backtracking; throws BoundExceeded above the bound.
bool isHamiltonian(const Graph& g, int bound = kDefaultExactSearchBound);

// Brute-force isomorphism test for small graphs (n <= 10).
bool isomorphic(const Graph& a, const Graph& b);

std::string graphToJson(const Graph& g);
Graph graphFromJson(const std::string& text);

}  // namespace gcx
