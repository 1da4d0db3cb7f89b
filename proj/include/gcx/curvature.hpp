#pragma once

#include <cstdint>
#include <vector>

#include "gcx/graph.hpp"
#include "gcx/polynomial.hpp"

namespace gcx {

struct CurvatureProfile {
  std::vector<Rational> values;
  std::vector<RationalPoly> functions;  // empty unless requested
  Rational total() const;
};

// K(v) = integral over [-1, 0] of the generating function of the unit sphere.
Rational levittCurvature(const Graph& g, int v);
CurvatureProfile curvatureProfile(const Graph& g, bool withFunctions = false);
// K_v(t) = integral from 0 to t of f_{S(v)}; the K_v sum to f_G - 1.
RationalPoly curvatureFunction(const Graph& g, int v);

// Curvature of G_n^+ at the 1-based vertex k from products of path generating functions.
Rational fastPathCurvature(int n, int k);
// All n values at once, sharing the polynomial table.
std::vector<Rational> fastPathCurvatures(int n);

// 1 - chi of the part of S(v) where f is smaller. f must be injective.
std::int64_t poincareHopfIndex(const Graph& g, const std::vector<std::int64_t>& f, int v);
std::vector<std::int64_t> poincareHopfIndices(const Graph& g, const std::vector<std::int64_t>& f);

struct PoincareHopfIdentity {
  RationalPoly lhs;  // f_G(t)
  RationalPoly rhs;  // 1 + t sum_v f_{S^-(v)}(t)
  bool holds() const { return lhs == rhs; }
};
PoincareHopfIdentity functionalPoincareHopf(const Graph& g, const std::vector<std::int64_t>& f);

// Exact average of the index over all vertex orders (<= 8 vertices).
std::vector<Rational> indexExpectation(const Graph& g);

// Index of each vertex added in the build-up G_1^+ -> ... -> G_n^+ (vertex m has S^- = G_{m-2}^+).
std::vector<std::int64_t> morseFiltrationIndices(int n);

struct RenormPoint {
  int k;           // 1-based vertex
  double x;        // k / n
  double value;    // n K_n(k)
};
std::vector<RenormPoint> renormalizationSample(int n, int residue);

// Largest |n K_n(k) - (n+6) K_{n+6}(k')| over vertices of one residue class, where k'
// is k for the left half and k+6 for the right half (the nearest vertex with x matching).
double renormalizationStability(int n, int residue);

}  // namespace gcx
