#pragma once

#include <vector>

#include "gcx/graph.hpp"
#include "gcx/linalg.hpp"

namespace gcx {

// Degree diagonal minus adjacency.
I64Matrix kirchhoffMatrix(const Graph& g);

// det(xI - m), lowest degree first, monic.
std::vector<Integer> charPolyExact(const I64Matrix& m);
// Product of the nonzero eigenvalues: (-1)^(size-j) c_j for the lowest nonzero c_j.
Integer pseudoDeterminant(const std::vector<Integer>& charPoly);

Integer rootedTreeCount(const Graph& g);
Integer rootedForestCount(const Graph& g);
// Throws InvalidArgument for disconnected graphs.
Rational treeForestRatio(const Graph& g);

// Spanning trees by deletion-contraction; small oracle (<= 10 vertices).
Integer spanningTreeCountDeletionContraction(const Graph& g);

// Kirchhoff eigenvalues of G_n in closed form: 0 and n - 4 sin^2(pi k/n), k = 1..n-1; sorted.
std::vector<double> dualCycleKirchhoffSpectrum(int n);
std::vector<double> kirchhoffSpectrum(const Graph& g);
// prod (1 + 1/lambda) over the closed-form nonzero spectrum of G_n.
double dualCycleTreeForestRatio(int n);

// sum over nonzero eigenvalues of lambda^-s; the zero count is the component count.
double spectralZeta(const Graph& g, double s);
double spectralZeta(const std::vector<double>& nonzeroEigenvalues, double s);
std::vector<double> nonzeroKirchhoffEigenvalues(const Graph& g);
// exp(sum_{s=1}^{terms} (-1)^(s+1) zeta(s)/s), the log series of prod (1 + 1/lambda).
double zetaForestTreeRatio(const std::vector<double>& nonzeroEigenvalues, int terms = 40);

}  // namespace gcx
