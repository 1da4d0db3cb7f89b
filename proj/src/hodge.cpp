#include "gcx/hodge.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "gcx/errors.hpp"

namespace gcx {

namespace {

std::int64_t orientSign(const Orientation* o, std::size_t a, std::size_t b) {
  if (!o) return 1;
  return static_cast<std::int64_t>((*o)[a]) * (*o)[b];
}

}  // namespace

SparseMatrix boundaryBlock(const Complex& k, int dim, const Orientation* orientation) {
  SparseMatrix m;
  if (dim <= 0 || dim > k.dimension()) {
    m.rows = dim <= 0 ? 0 : k.dimCount(dim - 1);
    m.columns.resize(dim < 0 ? 0 : k.dimCount(dim));
    return m;
  }
  std::size_t colBase = k.dimOffset(dim), rowBase = k.dimOffset(dim - 1);
  m.rows = k.dimCount(dim - 1);
  m.columns.resize(k.dimCount(dim));
  Simplex f(dim);
  for (std::size_t c = 0; c < m.columns.size(); ++c) {
    const auto& s = k[colBase + c];
    auto& col = m.columns[c];
    for (int drop = 0; drop <= dim; ++drop) {
      for (int a = 0, b = 0; a <= dim; ++a)
        if (a != drop) f[b++] = s[a];
      auto r = k.indexOf(f);
      if (r < 0) throw InvalidArgument("complex is not closed under faces");
      std::int64_t sign = (drop % 2 ? -1 : 1) * orientSign(orientation, colBase + c, static_cast<std::size_t>(r));
      col.emplace_back(static_cast<std::int32_t>(static_cast<std::size_t>(r) - rowBase), sign);
    }
    std::sort(col.begin(), col.end());
  }
  return m;
}

SparseMatrix exteriorDerivative(const Complex& k, const Orientation* orientation) {
  SparseMatrix d;
  d.rows = k.size();
  d.columns.resize(k.size());
  for (int dim = 1; dim <= k.dimension(); ++dim) {
    auto b = boundaryBlock(k, dim, orientation);
    std::size_t colBase = k.dimOffset(dim), rowBase = k.dimOffset(dim - 1);
    for (std::size_t c = 0; c < b.cols(); ++c)
      for (auto [r, v] : b.columns[c])
        d.columns[rowBase + r].emplace_back(static_cast<std::int32_t>(colBase + c), v);
  }
  for (auto& col : d.columns) std::sort(col.begin(), col.end());
  return d;
}

void checkDSquaredZero(const Complex& k, const Orientation* orientation) {
  for (int dim = 2; dim <= k.dimension(); ++dim) {
    auto hi = boundaryBlock(k, dim, orientation), lo = boundaryBlock(k, dim - 1, orientation);
    std::vector<std::int64_t> acc(lo.rows, 0);
    for (const auto& col : hi.columns) {
      std::fill(acc.begin(), acc.end(), 0);
      for (auto [mid, v] : col)
        for (auto [r, w] : lo.columns[mid]) acc[r] += v * w;
      if (std::any_of(acc.begin(), acc.end(), [](std::int64_t x) { return x != 0; }))
        throw InternalError("d∘d != 0 in dimension " + std::to_string(dim));
    }
  }
}

std::vector<I64Matrix> hodgeBlocks(const Complex& k, std::size_t denseCap) {
  std::vector<I64Matrix> out;
  int D = k.dimension();
  std::vector<SparseMatrix> bd(D + 2);
  for (int dim = 0; dim <= D + 1; ++dim) bd[dim] = boundaryBlock(k, dim);
  for (int dim = 0; dim <= D; ++dim) {
    std::size_t n = k.dimCount(dim);
    if (n > denseCap)
      throw BoundExceeded("Hodge block of size " + std::to_string(n) + " exceeds dense cap " + std::to_string(denseCap));
    I64Matrix L(n, std::vector<std::int64_t>(n, 0));
    // down part: boundary of dim-simplices, columns x,y share facets
    for (std::size_t x = 0; x < n && dim > 0; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const auto& a = bd[dim].columns[x];
        const auto& b = bd[dim].columns[y];
        std::size_t i = 0, j = 0;
        std::int64_t s = 0;
        while (i < a.size() && j < b.size()) {
          if (a[i].first < b[j].first) ++i;
          else if (b[j].first < a[i].first) ++j;
          else s += a[i++].second * b[j++].second;
        }
        L[x][y] += s;
      }
    // up part: cofaces shared
    if (dim + 1 <= D)
      for (const auto& col : bd[dim + 1].columns)
        for (auto [x, v] : col)
          for (auto [y, w] : col) L[x][y] += v * w;
    out.push_back(std::move(L));
  }
  return out;
}

RankReport boundaryRanks(const Complex& k, const Orientation* orientation, std::size_t denseCap) {
  int D = k.dimension();
  RankReport rep;
  rep.ranks.assign(std::max(D + 1, 0), 0);
  std::vector<std::vector<std::size_t>> perPrime(2, std::vector<std::size_t>(rep.ranks.size(), 0));
  for (int pi = 0; pi < 2; ++pi) {
    // High to low so pivots of block dim+1 clear columns of block dim.
    std::vector<char> clear;
    for (int dim = D; dim >= 1; --dim) {
      auto b = boundaryBlock(k, dim, orientation);
      auto piv = reduceColumnsModP(b, kRankPrimes[pi], clear.empty() ? nullptr : &clear);
      std::vector<char> next(b.rows, 0);
      std::size_t r = 0;
      for (auto p : piv)
        if (p >= 0) {
          ++r;
          next[p] = 1;
        }
      perPrime[pi][dim] = r;
      clear.swap(next);
    }
  }
  for (int dim = 1; dim <= D; ++dim) {
    if (perPrime[0][dim] == perPrime[1][dim]) {
      rep.ranks[dim] = perPrime[0][dim];
      continue;
    }
    rep.arbitrated = true;
    auto b = boundaryBlock(k, dim, orientation);
    if (b.rows > denseCap || b.cols() > denseCap)
      throw BoundExceeded("rank arbitration needs a dense block beyond the cap");
    rep.ranks[dim] = bareissRank(b.toDense());
  }
  return rep;
}

std::vector<std::int64_t> bettiVector(const Complex& k, const Orientation* orientation) {
  auto rep = boundaryRanks(k, orientation);
  int D = k.dimension();
  std::vector<std::int64_t> b;
  for (int dim = 0; dim <= D; ++dim) {
    std::int64_t v = static_cast<std::int64_t>(k.dimCount(dim)) - static_cast<std::int64_t>(rep.ranks[dim]);
    if (dim + 1 <= D) v -= static_cast<std::int64_t>(rep.ranks[dim + 1]);
    b.push_back(v);
  }
  return b;
}

namespace {

Eigen::MatrixXd toEigen(const I64Matrix& m) {
  Eigen::MatrixXd e(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) e(i, j) = static_cast<double>(m[i][j]);
  return e;
}

}  // namespace

double zeroEigenvalueTolerance(const I64Matrix& block) {
  double norm1 = 0;
  for (std::size_t j = 0; j < block.size(); ++j) {
    double s = 0;
    for (std::size_t i = 0; i < block.size(); ++i) s += std::abs(static_cast<double>(block[i][j]));
    norm1 = std::max(norm1, s);
  }
  return 1e-8 * (1 + norm1);
}

std::vector<std::vector<double>> hodgeBlockSpectra(const Complex& k, std::size_t denseCap) {
  if (k.size() > denseCap)
    throw BoundExceeded("complex of size " + std::to_string(k.size()) + " exceeds dense cap " + std::to_string(denseCap));
  std::vector<std::vector<double>> out;
  for (const auto& L : hodgeBlocks(k, denseCap)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(toEigen(L), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalFailure("eigensolver did not converge");
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    out.push_back(std::move(ev));
  }
  return out;
}

std::vector<double> hodgeSpectrum(const Complex& k, std::size_t denseCap) {
  std::vector<double> all;
  for (const auto& b : hodgeBlockSpectra(k, denseCap)) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<std::int64_t> bettiFromSpectrum(const Complex& k, std::size_t denseCap) {
  auto blocks = hodgeBlocks(k, denseCap);
  auto spectra = hodgeBlockSpectra(k, denseCap);
  std::vector<std::int64_t> b;
  for (std::size_t d = 0; d < blocks.size(); ++d) {
    double tol = zeroEigenvalueTolerance(blocks[d]);
    b.push_back(std::count_if(spectra[d].begin(), spectra[d].end(), [&](double x) { return std::abs(x) < tol; }));
  }
  return b;
}

std::vector<std::vector<Rational>> harmonicBasis(const Complex& k, int dim) {
  if (dim < 0 || dim > k.dimension()) throw InvalidArgument("dimension out of range");
  auto blocks = hodgeBlocks(k);
  return rationalNullspace(toRatMatrix(blocks[dim]));
}

Integer superTracePower(const Complex& k, int m, std::size_t denseCap) {
  if (m < 0) throw InvalidArgument("negative power");
  Integer total = 0;
  auto blocks = hodgeBlocks(k, denseCap);
  for (std::size_t d = 0; d < blocks.size(); ++d) {
    IntMatrix L = toIntMatrix(blocks[d]);
    std::size_t n = L.size();
    IntMatrix P(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) P[i][i] = 1;
    for (int step = 0; step < m; ++step) {
      IntMatrix Q(n, std::vector<Integer>(n, Integer(0)));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
          if (P[i][l] == 0) continue;
          for (std::size_t j = 0; j < n; ++j)
            if (L[l][j] != 0) Q[i][j] += P[i][l] * L[l][j];
        }
      P.swap(Q);
    }
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += P[i][i];
    total += d % 2 ? -tr : tr;
  }
  return total;
}

double superTraceHeat(const Complex& k, double t, std::size_t denseCap) {
  double s = 0;
  auto spectra = hodgeBlockSpectra(k, denseCap);
  for (std::size_t d = 0; d < spectra.size(); ++d) {
    double tr = 0;
    for (double l : spectra[d]) tr += std::exp(-t * l);
    s += d % 2 ? -tr : tr;
  }
  return s;
}

std::string coordinateText(const SparseMatrix& m) {
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> e;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (auto [r, v] : m.columns[c]) e.emplace_back(r, static_cast<std::int64_t>(c), v);
  std::sort(e.begin(), e.end());
  std::ostringstream os;
  for (auto [r, c, v] : e) os << r << ' ' << c << ' ' << v << '\n';
  return os.str();
}

std::string coordinateText(const I64Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j]) os << i << ' ' << j << ' ' << m[i][j] << '\n';
  return os.str();
}

}  // namespace gcx
