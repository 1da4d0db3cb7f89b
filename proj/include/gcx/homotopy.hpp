#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

constexpr int kDefaultBacktrackDepth = 3;

struct ContractibilityResult {
  bool contractible = false;  // false means Unknown, not "not contractible"
  // Vertices removed in order; each had a contractible unit sphere at removal time.
  // The last remaining vertex is `survivor`.
  std::vector<int> sequence;
  int survivor = -1;
};

ContractibilityResult isContractible(const Graph& g, int backtrackDepth = kDefaultBacktrackDepth);
// Replays a certificate; true iff every removal is legal and one vertex remains.
bool checkContractionCertificate(const Graph& g, const ContractibilityResult& r);

struct HomotopyClass {
  enum class Tag { Point, Sphere, Wedge, Other };
  Tag tag = Tag::Other;
  int dim = 0;    // Sphere(d) and Wedge(d, m); -1 for the empty sphere
  int count = 0;  // wedge summands
  std::vector<std::int64_t> betti;
  std::optional<ContractibilityResult> certificate;
  std::string toString() const;
  bool operator==(const HomotopyClass& o) const { return tag == o.tag && dim == o.dim && count == o.count; }
};

HomotopyClass pointClass();
HomotopyClass sphereClass(int d);
HomotopyClass wedgeClass(int d, int m);

HomotopyClass classifyHomotopyType(const Graph& g, int backtrackDepth = kDefaultBacktrackDepth);

// Homotopy type of the complement of a forest from the leaf-fold rule: an isolated
// vertex gives a point; otherwise removing the closed neighbourhood of a leaf's
// neighbour costs one suspension.
HomotopyClass forestComplementPrediction(const Graph& forest);

struct ManifoldReport {
  std::optional<bool> verdict;  // empty when some unit sphere stays unclassified
  std::vector<HomotopyClass> spheres;
};
ManifoldReport isHomotopyManifold(const Graph& g, int d, int backtrackDepth = kDefaultBacktrackDepth);

struct GenusResult {
  bool empty = false;
  std::int64_t genus = 0;  // 1 - chi of the induced complex; 1 when empty
};
GenusResult sphereIntersectionGenus(const Graph& g, const std::vector<int>& vertices);

// All unlabeled trees with n vertices (one representative each).
std::vector<Graph> enumerateTrees(int n);

}  // namespace gcx
