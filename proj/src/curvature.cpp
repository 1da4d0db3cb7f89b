#include "gcx/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gcx/complex.hpp"
#include "gcx/errors.hpp"

namespace gcx {

Rational CurvatureProfile::total() const {
  Rational s = 0;
  for (const auto& v : values) s += v;
  return s;
}

Rational levittCurvature(const Graph& g, int v) {
  return generatingFunction(unitSphereComplex(g, v)).integrate(-1, 0);
}

RationalPoly curvatureFunction(const Graph& g, int v) {
  return generatingFunction(unitSphereComplex(g, v)).antiderivative();
}

CurvatureProfile curvatureProfile(const Graph& g, bool withFunctions) {
  CurvatureProfile p;
  for (int v = 0; v < g.vertexCount(); ++v) {
    auto f = generatingFunction(unitSphereComplex(g, v));
    p.values.push_back(f.integrate(-1, 0));
    if (withFunctions) p.functions.push_back(f.antiderivative());
  }
  return p;
}

namespace {

// table[i] = jacobsthalPath(i - 1), i = 0..n
std::vector<RationalPoly> pathTable(int n) {
  std::vector<RationalPoly> t{RationalPoly::constant(1), RationalPoly::constant(1)};
  RationalPoly x = RationalPoly::monomial(1, 1);
  while (static_cast<int>(t.size()) <= n) t.push_back(t[t.size() - 1] + x * t[t.size() - 2]);
  return t;
}

}  // namespace

Rational fastPathCurvature(int n, int k) {
  if (n < 4) throw InvalidArgument("fast path curvature needs n >= 4");
  if (k < 1 || k > n) throw InvalidArgument("vertex index out of range 1..n");
  return (jacobsthalPath(k - 2) * jacobsthalPath(n - k - 1)).integrate(-1, 0);
}

std::vector<Rational> fastPathCurvatures(int n) {
  if (n < 4) throw InvalidArgument("fast path curvature needs n >= 4");
  auto t = pathTable(n);
  std::vector<Rational> out;
  for (int k = 1; k <= n; ++k) out.push_back((t[k - 1] * t[n - k]).integrate(-1, 0));
  return out;
}

namespace {

void requireInjective(const Graph& g, const std::vector<std::int64_t>& f) {
  if (static_cast<int>(f.size()) != g.vertexCount()) throw InvalidArgument("valuation size mismatch");
  auto s = f;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InvalidArgument("valuation is not injective");
}

std::vector<int> lowerNeighbors(const Graph& g, const std::vector<std::int64_t>& f, int v) {
  std::vector<int> w;
  for (int u : g.neighbors(v))
    if (f[u] < f[v]) w.push_back(u);
  return w;
}

}  // namespace

std::int64_t poincareHopfIndex(const Graph& g, const std::vector<std::int64_t>& f, int v) {
  requireInjective(g, f);
  if (v < 0 || v >= g.vertexCount()) throw InvalidArgument("invalid vertex");
  return 1 - eulerCharacteristic(inducedComplex(g, lowerNeighbors(g, f, v)));
}

std::vector<std::int64_t> poincareHopfIndices(const Graph& g, const std::vector<std::int64_t>& f) {
  requireInjective(g, f);
  std::vector<std::int64_t> out;
  for (int v = 0; v < g.vertexCount(); ++v)
    out.push_back(1 - eulerCharacteristic(inducedComplex(g, lowerNeighbors(g, f, v))));
  return out;
}

PoincareHopfIdentity functionalPoincareHopf(const Graph& g, const std::vector<std::int64_t>& f) {
  requireInjective(g, f);
  PoincareHopfIdentity id;
  id.lhs = generatingFunction(cliqueComplex(g));
  RationalPoly sum;
  for (int v = 0; v < g.vertexCount(); ++v) sum += generatingFunction(inducedComplex(g, lowerNeighbors(g, f, v)));
  id.rhs = RationalPoly::constant(1) + RationalPoly::monomial(1, 1) * sum;
  return id;
}

std::vector<Rational> indexExpectation(const Graph& g) {
  int n = g.vertexCount();
  if (n > 8) throw BoundExceeded("index expectation enumerates all orders; limited to 8 vertices");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Integer> sums(n, Integer(0));
  Integer count = 0;
  do {
    std::vector<std::int64_t> f(n);
    for (int i = 0; i < n; ++i) f[order[i]] = i;
    auto idx = poincareHopfIndices(g, f);
    for (int v = 0; v < n; ++v) sums[v] += idx[v];
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<Rational> out;
  for (int v = 0; v < n; ++v) out.emplace_back(sums[v], count);
  return out;
}

std::vector<std::int64_t> morseFiltrationIndices(int n) {
  if (n < 1) throw InvalidArgument("filtration needs n >= 1");
  std::vector<std::int64_t> out;
  for (int m = 1; m <= n; ++m) {
    // chi(G_j^+) from the generating function at -1; empty for j <= 0.
    std::int64_t chi = m - 2 <= 0 ? 0 : static_cast<std::int64_t>(numerator(1 - jacobsthalPath(m - 2).evaluate(-1)));
    out.push_back(1 - chi);
  }
  return out;
}

std::vector<RenormPoint> renormalizationSample(int n, int residue) {
  if (n < 24) throw InvalidArgument("renormalization sampling needs n >= 24");
  if (residue < 0 || residue > 5) throw InvalidArgument("residue must be in 0..5");
  auto K = fastPathCurvatures(n);
  std::vector<RenormPoint> pts;
  for (int k = 1; k <= n; ++k)
    if (k % 6 == residue) pts.push_back({k, static_cast<double>(k) / n, toDouble(K[k - 1] * n)});
  return pts;
}

double renormalizationStability(int n, int residue) {
  auto a = fastPathCurvatures(n), b = fastPathCurvatures(n + 6);
  double worst = 0;
  for (int k = 1; k <= n; ++k) {
    if (k % 6 != residue) continue;
    int k2 = 2 * k < n ? k : k + 6;
    double d = std::abs(toDouble(a[k - 1] * n) - toDouble(b[k2 - 1] * (n + 6)));
    worst = std::max(worst, d);
  }
  return worst;
}

}  // namespace gcx
