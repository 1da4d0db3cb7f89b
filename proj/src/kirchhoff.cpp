#include "gcx/kirchhoff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "gcx/errors.hpp"

namespace gcx {

I64Matrix kirchhoffMatrix(const Graph& g) {
  int n = g.vertexCount();
  I64Matrix k(n, std::vector<std::int64_t>(n, 0));
  for (int v = 0; v < n; ++v) {
    k[v][v] = g.degree(v);
    for (int w : g.neighbors(v)) k[v][w] = -1;
  }
  return k;
}

std::vector<Integer> charPolyExact(const I64Matrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw InvalidArgument("characteristic polynomial of non-square matrix");
  return charPolyBerkowitz(toIntMatrix(m));
}

Integer pseudoDeterminant(const std::vector<Integer>& c) {
  std::size_t size = c.size() - 1, j = 0;
  while (j < c.size() && c[j] == 0) ++j;
  if (j >= size) return 1;  // zero matrix: empty product
  return (size - j) % 2 ? -c[j] : c[j];
}

Integer rootedTreeCount(const Graph& g) { return pseudoDeterminant(charPolyExact(kirchhoffMatrix(g))); }

Integer rootedForestCount(const Graph& g) {
  auto k = kirchhoffMatrix(g);
  for (std::size_t i = 0; i < k.size(); ++i) k[i][i] += 1;
  return bareissDeterminant(toIntMatrix(k));
}

Rational treeForestRatio(const Graph& g) {
  if (g.vertexCount() == 0 || !isConnected(g)) throw InvalidArgument("tree/forest ratio needs a connected graph");
  return Rational(rootedForestCount(g), rootedTreeCount(g));
}

namespace {

Integer treesMulti(std::vector<std::vector<int>> a) {
  int n = static_cast<int>(a.size());
  if (n <= 1) return 1;
  // pick an edge between vertex 0 and some neighbour
  int u = 0, v = -1;
  for (int w = 1; w < n; ++w)
    if (a[0][w] > 0) {
      v = w;
      break;
    }
  if (v < 0) return 0;  // vertex 0 isolated: disconnected
  int mult = a[u][v];
  // deletion: remove all parallel copies
  auto del = a;
  del[u][v] = del[v][u] = 0;
  // contraction: merge v into u, drop loops
  std::vector<std::vector<int>> con(n - 1, std::vector<int>(n - 1, 0));
  auto idx = [&](int x) { return x == v ? u : (x > v ? x - 1 : x); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int ix = idx(x), iy = idx(y);
      if (ix != iy) con[ix][iy] += a[x][y];
    }
  return treesMulti(std::move(del)) + mult * treesMulti(std::move(con));
}

}  // namespace

Integer spanningTreeCountDeletionContraction(const Graph& g) {
  if (g.vertexCount() > 10) throw BoundExceeded("deletion-contraction oracle limited to 10 vertices");
  int n = g.vertexCount();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return treesMulti(std::move(a));
}

std::vector<double> dualCycleKirchhoffSpectrum(int n) {
  if (n < 5) throw InvalidArgument("closed-form spectrum needs n >= 5");
  std::vector<double> ev{0.0};
  for (int k = 1; k < n; ++k) {
    double s = std::sin(std::numbers::pi * k / n);
    ev.push_back(n - 4 * s * s);
  }
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> kirchhoffSpectrum(const Graph& g) {
  auto k = kirchhoffMatrix(g);
  int n = g.vertexCount();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<double>(k[i][j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalFailure("eigensolver did not converge");
  return std::vector<double>(es.eigenvalues().data(), es.eigenvalues().data() + n);
}

double dualCycleTreeForestRatio(int n) {
  auto ev = dualCycleKirchhoffSpectrum(n);
  double logr = 0;
  for (std::size_t i = 1; i < ev.size(); ++i) logr += std::log1p(1.0 / ev[i]);
  return std::exp(logr);
}

std::vector<double> nonzeroKirchhoffEigenvalues(const Graph& g) {
  auto ev = kirchhoffSpectrum(g);
  std::size_t zeros = connectedComponents(g).size();
  return std::vector<double>(ev.begin() + static_cast<std::ptrdiff_t>(std::min(zeros, ev.size())), ev.end());
}

double spectralZeta(const std::vector<double>& ev, double s) {
  if (s < 1) throw InvalidArgument("spectral zeta evaluated only for s >= 1");
  double z = 0;
  for (double l : ev) z += std::pow(l, -s);
  return z;
}

double spectralZeta(const Graph& g, double s) { return spectralZeta(nonzeroKirchhoffEigenvalues(g), s); }

double zetaForestTreeRatio(const std::vector<double>& ev, int terms) {
  double acc = 0;
  for (int s = 1; s <= terms; ++s) acc += (s % 2 ? 1.0 : -1.0) * spectralZeta(ev, s) / s;
  return std::exp(acc);
}

}  // namespace gcx
