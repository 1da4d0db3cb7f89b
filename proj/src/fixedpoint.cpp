#include "gcx/fixedpoint.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "gcx/errors.hpp"

namespace gcx {

void verifyAutomorphism(const Graph& g, const std::vector<int>& perm) {
  int n = g.vertexCount();
  if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation size mismatch");
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) throw InvalidArgument("not a permutation");
    seen[v] = 1;
  }
  for (auto [u, v] : g.edges())
    if (!g.adjacent(perm[u], perm[v])) throw InvalidArgument("permutation does not preserve edges");
}

std::vector<Automorphism> dihedralAutomorphisms(int n) {
  if (n < 4) throw InvalidArgument("dihedral automorphisms need n >= 4");
  Graph g = cycleComplement(n);
  std::vector<Automorphism> out;
  for (int kind = 0; kind < 2; ++kind)
    for (int j = 0; j < n; ++j) {
      Automorphism a;
      a.kind = kind == 0 ? "rot" : "refl";
      a.j = j;
      for (int x = 0; x < n; ++x) a.perm.push_back(kind == 0 ? (x + j) % n : ((j - x) % n + n) % n);
      try {
        verifyAutomorphism(g, a.perm);
      } catch (const InvalidArgument& e) {
        throw InternalError(std::string("dihedral map is not an automorphism: ") + e.what());
      }
      out.push_back(std::move(a));
    }
  return out;
}

std::vector<Automorphism> pathComplementAutomorphisms(int n) {
  if (n < 1) throw InvalidArgument("path complement automorphisms need n >= 1");
  Graph g = pathComplement(n);
  Automorphism id{{}, "id", 0}, rev{{}, "rev", 1};
  for (int x = 0; x < n; ++x) {
    id.perm.push_back(x);
    rev.perm.push_back(n - 1 - x);
  }
  verifyAutomorphism(g, rev.perm);
  return {id, rev};
}

std::vector<int> printedRotationColumns(int n) {
  std::vector<int> cols;
  for (int k = 1; k <= n; ++k) cols.push_back((n - k) % n);
  return cols;
}

std::vector<int> printedReflectionColumns(int n) {
  std::vector<int> cols;
  for (int k = 1; k <= n; ++k) cols.push_back(((n - 1 - k) % n + n) % n);
  return cols;
}

std::pair<Simplex, int> applyToSimplex(const std::vector<int>& perm, const Simplex& x) {
  Simplex y;
  y.reserve(x.size());
  for (int v : x) y.push_back(perm.at(v));
  int inversions = 0;
  for (std::size_t a = 0; a < y.size(); ++a)
    for (std::size_t b = a + 1; b < y.size(); ++b)
      if (y[a] > y[b]) ++inversions;
  std::sort(y.begin(), y.end());
  return {y, inversions % 2 ? -1 : 1};
}

std::vector<Simplex> fixedSimplices(const Complex& k, const std::vector<int>& perm) {
  std::vector<Simplex> out;
  for (const auto& x : k.simplices()) {
    auto [y, s] = applyToSimplex(perm, x);
    if (y == x) out.push_back(x);
    else if (k.indexOf(y) < 0) throw InvalidArgument("map does not preserve the complex");
  }
  return out;
}

std::int64_t lefschetzNumber(const Complex& k, const std::vector<int>& perm) {
  std::int64_t sum = 0;
  for (const auto& x : k.simplices()) {
    auto [y, s] = applyToSimplex(perm, x);
    if (y != x) continue;
    sum += ((x.size() - 1) % 2 ? -1 : 1) * s;
  }
  return sum;
}

SparseMatrix formAction(const Complex& k, int dim, const std::vector<int>& perm, const Orientation* orientation) {
  SparseMatrix u;
  std::size_t base = k.dimOffset(dim);
  u.rows = k.dimCount(dim);
  u.columns.resize(u.rows);
  for (std::size_t c = 0; c < u.rows; ++c) {
    auto [y, s] = applyToSimplex(perm, k[base + c]);
    auto r = k.indexOf(y);
    if (r < 0) throw InvalidArgument("map does not preserve the complex");
    std::int64_t sign = s;
    if (orientation) sign *= static_cast<std::int64_t>((*orientation)[base + c]) * (*orientation)[r];
    u.columns[c].emplace_back(static_cast<std::int32_t>(static_cast<std::size_t>(r) - base), sign);
  }
  return u;
}

namespace {

I64Matrix orientedHodgeBlock(const Complex& k, int dim, const Orientation* orientation) {
  std::size_t n = k.dimCount(dim);
  I64Matrix L(n, std::vector<std::int64_t>(n, 0));
  auto down = boundaryBlock(k, dim, orientation), up = boundaryBlock(k, dim + 1, orientation);
  if (dim > 0) {
    std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> rows(down.rows);
    for (std::size_t c = 0; c < down.cols(); ++c)
      for (auto [r, v] : down.columns[c]) rows[r].emplace_back(static_cast<std::int32_t>(c), v);
    for (const auto& row : rows)
      for (auto [x, v] : row)
        for (auto [y, w] : row) L[x][y] += v * w;
  }
  for (const auto& col : up.columns)
    for (auto [x, v] : col)
      for (auto [y, w] : col) L[x][y] += v * w;
  return L;
}

}  // namespace

CohomologicalLefschetz lefschetzViaCohomology(const Complex& k, const std::vector<int>& perm,
                                              const Orientation* orientation, std::size_t denseCap) {
  if (k.size() > denseCap) throw BoundExceeded("complex exceeds dense cap for cohomological Lefschetz");
  CohomologicalLefschetz out;
  for (int dim = 0; dim <= k.dimension(); ++dim) {
    auto L = orientedHodgeBlock(k, dim, orientation);
    std::size_t n = L.size();
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<double>(L[i][j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success) throw NumericalFailure("eigensolver did not converge");
    double tol = zeroEigenvalueTolerance(L);
    std::vector<int> kernel;
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(es.eigenvalues()(i)) < tol) kernel.push_back(static_cast<int>(i));
    if (kernel.empty()) continue;
    Eigen::MatrixXd V(n, kernel.size());
    for (std::size_t c = 0; c < kernel.size(); ++c) V.col(c) = es.eigenvectors().col(kernel[c]);
    // tr(P U) = tr(V^T U V)
    auto u = formAction(k, dim, perm, orientation);
    Eigen::MatrixXd UV = Eigen::MatrixXd::Zero(n, kernel.size());
    for (std::size_t c = 0; c < n; ++c)
      for (auto [r, s] : u.columns[c]) UV.row(r) += static_cast<double>(s) * V.row(c);
    double tr = (V.transpose() * UV).trace();
    out.raw += dim % 2 ? -tr : tr;
  }
  out.value = std::llround(out.raw);
  out.residual = std::abs(out.raw - static_cast<double>(out.value));
  if (out.residual > 1e-6) throw NumericalFailure("cohomological Lefschetz number did not round cleanly");
  return out;
}

LefschetzRow dihedralLefschetz(int n) {
  LefschetzRow row;
  row.n = n;
  Complex k = dualCycleComplex(n);
  Integer total = 0;
  for (const auto& a : dihedralAutomorphisms(n)) {
    auto l = lefschetzNumber(k, a.perm);
    (a.kind == "rot" ? row.rotations : row.reflections).push_back(l);
    total += l;
  }
  row.average = Rational(total, 2 * n);
  return row;
}

Rational averageLefschetz(int n) { return dihedralLefschetz(n).average; }

}  // namespace gcx
