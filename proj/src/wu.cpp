#include "gcx/wu.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "gcx/errors.hpp"
#include "gcx/fixedpoint.hpp"

namespace gcx {

namespace {

int omega(const Simplex& x) { return x.size() % 2 ? 1 : -1; }

bool intersects(const Simplex& a, const Simplex& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return false;
}

// Calls fn(index of s) for every non-empty subset s of x.
template <class Fn>
void forEachFace(const Complex& k, const Simplex& x, Fn&& fn) {
  std::size_t m = x.size();
  Simplex s;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    s.clear();
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) s.push_back(x[i]);
    auto idx = k.indexOf(s);
    if (idx < 0) throw InvalidArgument("complex is not closed under faces");
    fn(static_cast<std::size_t>(idx), s.size());
  }
}

// star[s] = sum over x containing s of w(x)
std::vector<std::int64_t> starSums(const Complex& k) {
  if (k.dimension() >= 30) throw BoundExceeded("simplex too large for face enumeration");
  std::vector<std::int64_t> c(k.size(), 0);
  for (const auto& x : k.simplices()) {
    int w = omega(x);
    forEachFace(k, x, [&](std::size_t s, std::size_t) { c[s] += w; });
  }
  return c;
}

}  // namespace

I64Matrix fMatrix(const Complex& k) {
  int D = k.dimension();
  if (D < 0) return {};
  // cnt[s][j] = number of j-simplices containing s
  std::vector<std::vector<std::int64_t>> cnt(k.size(), std::vector<std::int64_t>(D + 1, 0));
  for (const auto& x : k.simplices()) {
    int j = static_cast<int>(x.size()) - 1;
    forEachFace(k, x, [&](std::size_t s, std::size_t) { cnt[s][j] += 1; });
  }
  I64Matrix f(D + 1, std::vector<std::int64_t>(D + 1, 0));
  for (std::size_t s = 0; s < k.size(); ++s) {
    std::int64_t sign = k[s].size() % 2 ? 1 : -1;
    for (int a = 0; a <= D; ++a)
      for (int b = 0; b <= D; ++b) f[a][b] += sign * cnt[s][a] * cnt[s][b];
  }
  return f;
}

Integer wuFromFMatrix(const I64Matrix& f) {
  Integer w = 0;
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < f[a].size(); ++b) w += ((a + b) % 2 ? -1 : 1) * f[a][b];
  return w;
}

Integer wuCharacteristic(const Complex& k, int order) {
  if (order < 1) throw InvalidArgument("Wu characteristic order must be >= 1");
  auto c = starSums(k);
  Integer w = 0;
  for (std::size_t s = 0; s < k.size(); ++s) {
    Integer p = pow(Integer(c[s]), static_cast<unsigned>(order));
    w += k[s].size() % 2 ? p : Integer(-p);
  }
  return w;
}

Integer wuCharacteristicDirect(const Complex& k, int order) {
  if (order < 1 || order > 4) throw InvalidArgument("direct Wu characteristic supports orders 1..4");
  if (k.size() > kDirectTupleSimplexCap)
    throw BoundExceeded("direct tuple iteration limited to " + std::to_string(kDirectTupleSimplexCap) + " simplices");
  const auto& s = k.simplices();
  std::size_t n = s.size();
  Integer total = 0;
  // Depth-first over tuples, carrying the running intersection so dead branches stop early.
  std::vector<Simplex> inter(order + 1);
  std::function<void(int, int)> rec = [&](int depth, int sign) {
    if (depth == order) {
      total += sign;
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      Simplex next;
      if (depth == 0) next = s[i];
      else {
        std::set_intersection(inter[depth].begin(), inter[depth].end(), s[i].begin(), s[i].end(),
                              std::back_inserter(next));
        if (next.empty()) continue;
      }
      inter[depth + 1] = std::move(next);
      rec(depth + 1, sign * omega(s[i]));
    }
  };
  rec(0, 1);
  return total;
}

namespace {

// Cofacets of simplex x inside the complex together with the insertion position.
std::vector<std::vector<std::pair<std::uint32_t, int>>> cofacetTable(const Complex& k) {
  std::vector<std::vector<std::pair<std::uint32_t, int>>> out(k.size());
  Simplex f;
  for (std::uint32_t a = 0; a < k.size(); ++a) {
    const auto& s = k[a];
    if (s.size() < 2) continue;
    f.resize(s.size() - 1);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      for (std::size_t i = 0, j = 0; i < s.size(); ++i)
        if (i != drop) f[j++] = s[i];
      auto b = k.indexOf(f);
      out[b].emplace_back(a, static_cast<int>(drop));
    }
  }
  return out;
}

}  // namespace

PairComplex::PairComplex(const Complex& k, std::size_t pairCap) : k_(&k) {
  const auto& s = k.simplices();
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> byCard;
  std::size_t total = 0;
  for (std::uint32_t x = 0; x < s.size(); ++x)
    for (std::uint32_t y = 0; y < s.size(); ++y) {
      if (!intersects(s[x], s[y])) continue;
      std::size_t c = s[x].size() + s[y].size();
      if (byCard.size() < c - 1) byCard.resize(c - 1);
      byCard[c - 2].emplace_back(x, y);
      if (++total > pairCap) throw BoundExceeded("pair complex exceeds cap " + std::to_string(pairCap));
    }
  // Within one cardinality, canonical index order on x then y is lexicographic on (x, y)
  // only blockwise; sort by the simplices themselves to get the lexicographic order.
  for (auto& block : byCard) {
    std::sort(block.begin(), block.end(), [&](const auto& a, const auto& b) {
      if (s[a.first] != s[b.first]) return s[a.first] < s[b.first];
      return s[a.second] < s[b.second];
    });
    offsets_.push_back(pairs_.size());
    pairs_.insert(pairs_.end(), block.begin(), block.end());
  }
  if (!byCard.empty()) offsets_.push_back(pairs_.size());
  cofacets_ = cofacetTable(k);
}

std::size_t PairComplex::offset(int c) const {
  if (c <= 2) return 0;
  if (c - 2 >= static_cast<int>(offsets_.size())) return pairs_.size();
  return offsets_[c - 2];
}

std::int64_t PairComplex::indexOf(std::uint32_t x, std::uint32_t y) const {
  const auto& s = k_->simplices();
  int c = static_cast<int>(s[x].size() + s[y].size());
  auto first = pairs_.begin() + offset(c), last = pairs_.begin() + offset(c + 1);
  auto it = std::lower_bound(first, last, std::make_pair(x, y), [&](const auto& a, const auto& b) {
    if (s[a.first] != s[b.first]) return s[a.first] < s[b.first];
    return s[a.second] < s[b.second];
  });
  if (it == last || *it != std::make_pair(x, y)) return -1;
  return it - pairs_.begin();
}

SparseMatrix wuDifferential(const PairComplex& p, int c, const Orientation* orientation) {
  const Complex& k = p.base();
  const auto& cof = p.cofacets();
  SparseMatrix d;
  d.rows = p.count(c + 1);
  d.columns.resize(p.count(c));
  std::size_t base = p.offset(c), rowBase = p.offset(c + 1);
  auto os = [&](std::uint32_t a) -> std::int64_t { return orientation ? (*orientation)[a] : 1; };
  for (std::size_t col = 0; col < d.columns.size(); ++col) {
    auto [x, y] = p[base + col];
    std::int64_t xs = static_cast<std::int64_t>(k[x].size());
    auto& out = d.columns[col];
    for (auto [x2, pos] : cof[x]) {
      auto r = p.indexOf(x2, y);
      out.emplace_back(static_cast<std::int32_t>(r - static_cast<std::int64_t>(rowBase)),
                       (pos % 2 ? -1 : 1) * os(x2) * os(x));
    }
    for (auto [y2, pos] : cof[y]) {
      auto r = p.indexOf(x, y2);
      out.emplace_back(static_cast<std::int32_t>(r - static_cast<std::int64_t>(rowBase)),
                       ((xs + pos) % 2 ? -1 : 1) * os(y2) * os(y));
    }
    std::sort(out.begin(), out.end());
  }
  return d;
}

void checkWuDSquaredZero(const PairComplex& p) {
  for (int c = 2; c + 2 <= p.maxCard(); ++c) {
    auto lo = wuDifferential(p, c), hi = wuDifferential(p, c + 1);
    std::vector<std::int64_t> acc(hi.rows, 0);
    for (const auto& col : lo.columns) {
      std::fill(acc.begin(), acc.end(), 0);
      for (auto [mid, v] : col)
        for (auto [r, w] : hi.columns[mid]) acc[r] += v * w;
      if (std::any_of(acc.begin(), acc.end(), [](std::int64_t x) { return x != 0; }))
        throw InternalError("Wu differential does not square to zero at cardinality " + std::to_string(c));
    }
  }
}

std::vector<std::int64_t> wuBetti(const Complex& k, std::size_t pairCap, const Orientation* orientation) {
  PairComplex p(k, pairCap);
  int top = p.maxCard();
  if (top < 2) return {};
  std::vector<std::size_t> rank(top + 2, 0);  // rank[c] = rank of d from c to c+1
  for (int c = 2; c < top; ++c) {
    auto d = wuDifferential(p, c, orientation);
    auto r0 = rankModP(d, kRankPrimes[0]), r1 = rankModP(d, kRankPrimes[1]);
    rank[c] = r0 == r1 ? r0 : bareissRank(d.toDense());
  }
  std::vector<std::int64_t> b;
  for (int c = 2; c <= top; ++c)
    b.push_back(static_cast<std::int64_t>(p.count(c)) - static_cast<std::int64_t>(rank[c]) -
                static_cast<std::int64_t>(c > 2 ? rank[c - 1] : 0));
  return b;
}

std::int64_t wuLefschetz(const Complex& k, const std::vector<int>& perm) {
  std::vector<std::pair<std::size_t, int>> fixed;  // simplex, index
  for (std::size_t i = 0; i < k.size(); ++i) {
    auto [y, s] = applyToSimplex(perm, k[i]);
    if (y == k[i]) fixed.emplace_back(i, omega(k[i]) * s);
  }
  std::int64_t sum = 0;
  for (auto [a, ia] : fixed)
    for (auto [b, ib] : fixed)
      if (intersects(k[a], k[b])) sum += ia * ib;
  return sum;
}

std::int64_t wuLefschetzViaCohomology(const Complex& k, const std::vector<int>& perm, std::size_t denseCap) {
  PairComplex p(k);
  if (p.size() > denseCap) throw BoundExceeded("pair complex exceeds dense cap");
  int top = p.maxCard();
  std::vector<SparseMatrix> d(top + 2);
  for (int c = 2; c < top; ++c) d[c] = wuDifferential(p, c);
  double raw = 0;
  for (int c = 2; c <= top; ++c) {
    std::size_t n = p.count(c);
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    // up part d_c^T d_c
    if (c < top) {
      std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> rows(d[c].rows);
      for (std::size_t col = 0; col < d[c].cols(); ++col)
        for (auto [r, v] : d[c].columns[col]) rows[r].emplace_back(static_cast<std::int32_t>(col), v);
      for (const auto& row : rows)
        for (auto [a, v] : row)
          for (auto [b, w] : row) L(a, b) += static_cast<double>(v * w);
    }
    // down part d_{c-1} d_{c-1}^T
    if (c > 2)
      for (const auto& col : d[c - 1].columns)
        for (auto [a, v] : col)
          for (auto [b, w] : col) L(a, b) += static_cast<double>(v * w);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
    if (es.info() != Eigen::Success) throw NumericalFailure("eigensolver did not converge");
    double norm = L.cwiseAbs().colwise().sum().maxCoeff();
    std::vector<int> ker;
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(es.eigenvalues()(i)) < 1e-8 * (1 + norm)) ker.push_back(static_cast<int>(i));
    if (ker.empty()) continue;
    Eigen::MatrixXd V(n, ker.size());
    for (std::size_t i = 0; i < ker.size(); ++i) V.col(i) = es.eigenvectors().col(ker[i]);
    Eigen::MatrixXd UV = Eigen::MatrixXd::Zero(n, ker.size());
    std::size_t base = p.offset(c);
    for (std::size_t col = 0; col < n; ++col) {
      auto [x, y] = p[base + col];
      auto [ix, sx] = applyToSimplex(perm, k[x]);
      auto [iy, sy] = applyToSimplex(perm, k[y]);
      auto r = p.indexOf(static_cast<std::uint32_t>(k.indexOf(ix)), static_cast<std::uint32_t>(k.indexOf(iy)));
      UV.row(r - static_cast<std::int64_t>(base)) += static_cast<double>(sx * sy) * V.row(col);
    }
    double tr = (V.transpose() * UV).trace();
    raw += c % 2 ? -tr : tr;
  }
  auto v = std::llround(raw);
  if (std::abs(raw - static_cast<double>(v)) > 1e-6) throw NumericalFailure("Wu Lefschetz trace did not round cleanly");
  return v;
}

std::vector<Rational> wuCurvature(const Complex& k) {
  auto c = starSums(k);
  // meet[x] = sum over y meeting x of w(y), by inclusion-exclusion over faces of x
  std::vector<std::int64_t> meet(k.size(), 0);
  for (std::size_t x = 0; x < k.size(); ++x)
    forEachFace(k, k[x], [&](std::size_t s, std::size_t card) { meet[x] += (card % 2 ? 1 : -1) * c[s]; });
  std::vector<Rational> K(k.vertexBound(), Rational(0));
  for (std::size_t x = 0; x < k.size(); ++x) {
    Rational share(omega(k[x]) * meet[x], static_cast<long>(k[x].size()));
    for (int v : k[x]) K[v] += share;
  }
  return K;
}

I64Matrix connectionMatrix(const Complex& k) {
  std::size_t n = k.size();
  I64Matrix L(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (intersects(k[i], k[j])) L[i][j] = L[j][i] = 1;
  return L;
}

namespace {

Eigen::MatrixXd toEigen(const I64Matrix& m) {
  Eigen::MatrixXd e(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) e(i, j) = static_cast<double>(m[i][j]);
  return e;
}

}  // namespace

ConnectionReport connectionReport(const Complex& k, std::size_t denseCap) {
  if (k.size() > denseCap) throw BoundExceeded("connection matrix exceeds dense cap");
  ConnectionReport r;
  auto L = connectionMatrix(k);
  std::size_t n = L.size();
  r.det = determinantMultimodular(L);
  for (const auto& s : k.simplices())
    if (s.size() % 2 == 0) ++r.oddSimplices;
  auto E = toEigen(L);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(E, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalFailure("eigensolver did not converge");
  bool ambiguous = false;
  for (std::size_t i = 0; i < n; ++i) {
    double l = es.eigenvalues()(i);
    if (std::abs(l) < 1e-8) ambiguous = true;
    (l > 0 ? r.positive : r.negative) += 1;
  }
  if (ambiguous || (r.det != 0 && r.negative % 2 != (r.det < 0 ? 1 : 0))) {
    if (n > 200) throw NumericalFailure("signature ambiguous and too large for exact inertia");
    auto in = exactInertia(toIntMatrix(L));
    r.positive = in.positive;
    r.negative = in.negative;
    r.exactInertiaUsed = true;
  }
  r.signature = r.positive - r.negative;
  if (r.det == 1 || r.det == -1) {
    // The inverse is integral; round the float inverse and certify L * inv = I exactly.
    Eigen::MatrixXd inv = E.partialPivLu().inverse();
    I64Matrix Z(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) Z[i][j] = std::llround(inv(i, j));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (std::size_t l = 0; l < n; ++l) s += L[i][l] * Z[l][j];
        if (s != (i == j ? 1 : 0)) throw NumericalFailure("rounded inverse failed the exact check");
      }
    for (const auto& row : Z)
      for (auto z : row) r.energySum += z;
  } else {
    throw NumericalFailure("connection matrix is not unimodular; energy sum undefined over the integers");
  }
  return r;
}

I64Matrix countingMatrix(const Complex& k, CountingReading reading) {
  std::size_t n = k.size();
  I64Matrix M(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Simplex common;
      std::set_intersection(k[i].begin(), k[i].end(), k[j].begin(), k[j].end(), std::back_inserter(common));
      auto m = static_cast<std::int64_t>(common.size());
      M[i][j] = reading == CountingReading::SubsimplexCount ? (std::int64_t(1) << m) - 1 : m;
    }
  return M;
}

CountingReport countingReport(const Complex& k, CountingReading reading, std::size_t denseCap) {
  if (k.size() > denseCap) throw BoundExceeded("counting matrix exceeds dense cap");
  auto M = countingMatrix(k, reading);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(toEigen(M), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalFailure("eigensolver did not converge");
  const auto& ev = es.eigenvalues();
  std::size_t n = ev.size();
  CountingReport r;
  r.minEigenvalue = n ? ev(0) : 0;
  r.positiveDefinite = n == 0 || ev(0) > 1e-9;
  if (!r.positiveDefinite) {
    r.isospectralDeviation = INFINITY;
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    r.isospectralDeviation = std::max(r.isospectralDeviation, std::abs(ev(i) - 1.0 / ev(n - 1 - i)));
  return r;
}

bool hydrogenCheck(const Complex& k) {
  if (k.dimension() > 1) throw InvalidArgument("hydrogen identity applies to complexes of dimension <= 1");
  std::size_t n = k.size();
  I64Matrix D(n, std::vector<std::int64_t>(n, 0));
  auto d = exteriorDerivative(k);
  for (std::size_t c = 0; c < n; ++c)
    for (auto [r, v] : d.columns[c]) {
      D[r][c] = std::abs(v);
      D[c][r] = std::abs(v);
    }
  RatMatrix Dr = toRatMatrix(D);
  RatMatrix H = multiply(Dr, Dr);
  auto L = connectionMatrix(k);
  RatMatrix Lr = toRatMatrix(L);
  RatMatrix Li = rationalInverse(Lr);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (H[i][j] != Lr[i][j] - Li[i][j]) return false;
  return true;
}

}  // namespace gcx
