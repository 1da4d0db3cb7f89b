#include "gcx/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "gcx/errors.hpp"

namespace gcx {

IntMatrix SparseMatrix::toDense() const {
  IntMatrix d(rows, std::vector<Integer>(cols(), Integer(0)));
  for (std::size_t j = 0; j < cols(); ++j)
    for (auto [r, v] : columns[j]) d[r][j] = v;
  return d;
}

namespace {

using Entry = std::pair<std::int32_t, std::uint32_t>;
using Column = std::vector<Entry>;

std::uint32_t modReduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t mulMod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powMod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mulMod(r, a, p);
    a = mulMod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t invMod(std::uint32_t a, std::uint32_t p) { return powMod(a, p - 2, p); }

// col <- col - factor * other, both sorted by row.
void axpy(Column& col, const Column& other, std::uint32_t factor, std::uint32_t p, Column& scratch) {
  scratch.clear();
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < other.size()) {
    if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
      scratch.push_back(col[i++]);
    } else if (i == col.size() || other[j].first < col[i].first) {
      scratch.emplace_back(other[j].first, (p - mulMod(factor, other[j].second, p)) % p);
      ++j;
    } else {
      std::uint32_t v = (col[i].second + p - mulMod(factor, other[j].second, p)) % p;
      if (v) scratch.emplace_back(col[i].first, v);
      ++i;
      ++j;
    }
  }
  col.swap(scratch);
}

}  // namespace

std::vector<std::int32_t> reduceColumnsModP(const SparseMatrix& m, std::uint32_t p,
                                            const std::vector<char>* skip) {
  std::vector<Column> reduced(m.cols());
  std::vector<std::int32_t> pivotOwner(m.rows, -1), pivots(m.cols(), -1);
  Column scratch;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (skip && (*skip)[j]) continue;
    Column col;
    for (auto [r, v] : m.columns[j]) {
      auto x = modReduce(v, p);
      if (x) col.emplace_back(r, x);
    }
    while (!col.empty()) {
      auto [low, val] = col.back();
      std::int32_t owner = pivotOwner[low];
      if (owner < 0) break;
      const Column& other = reduced[owner];
      std::uint32_t factor = mulMod(val, invMod(other.back().second, p), p);
      axpy(col, other, factor, p, scratch);
    }
    if (!col.empty()) {
      pivots[j] = col.back().first;
      pivotOwner[col.back().first] = static_cast<std::int32_t>(j);
      reduced[j] = std::move(col);
    }
  }
  return pivots;
}

std::size_t rankModP(const SparseMatrix& m, std::uint32_t p) {
  auto piv = reduceColumnsModP(m, p);
  return static_cast<std::size_t>(std::count_if(piv.begin(), piv.end(), [](std::int32_t r) { return r >= 0; }));
}

std::size_t bareissRank(IntMatrix m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k)
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

Integer bareissDeterminant(IntMatrix m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<Integer> charPolyBerkowitz(const IntMatrix& a) {
  std::size_t n = a.size();
  if (n == 0) return {Integer(1)};
  // Coefficients kept highest degree first during the recursion.
  std::vector<Integer> v{Integer(1), -a[0][0]};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<Integer> t(r + 2);
    t[0] = 1;
    t[1] = -a[r][r];
    std::vector<Integer> c(r);  // A_r^k C
    for (std::size_t i = 0; i < r; ++i) c[i] = a[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      Integer s = 0;
      for (std::size_t i = 0; i < r; ++i) s += a[r][i] * c[i];
      t[k + 2] = -s;
      if (k + 1 < r) {
        std::vector<Integer> next(r, Integer(0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            if (a[i][j] != 0) next[i] += a[i][j] * c[j];
        c.swap(next);
      }
    }
    std::vector<Integer> w(r + 2, Integer(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) w[i] += t[i - j] * v[j];
    v.swap(w);
  }
  std::reverse(v.begin(), v.end());
  return v;
}

namespace {

std::uint32_t detModP(const I64Matrix& m, std::uint32_t p) {
  std::size_t n = m.size();
  std::vector<std::vector<std::uint32_t>> a(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = modReduce(m[i][j], p);
  std::uint32_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = (p - det) % p;
    }
    det = mulMod(det, a[k][k], p);
    std::uint32_t inv = invMod(a[k][k], p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      std::uint32_t f = mulMod(a[i][k], inv, p);
      auto& ri = a[i];
      const auto& rk = a[k];
      for (std::size_t j = k + 1; j < n; ++j)
        if (rk[j]) ri[j] = static_cast<std::uint32_t>((ri[j] + static_cast<std::uint64_t>(p - f) * rk[j]) % p);
      ri[k] = 0;
    }
  }
  return det;
}

bool isPrime32(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

Integer determinantMultimodular(const I64Matrix& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  // log2 of the Hadamard bound.
  double bits = 0;
  for (const auto& row : m) {
    if (row.size() != n) throw InvalidArgument("determinant of non-square matrix");
    long double s = 0;
    for (auto x : row) s += static_cast<long double>(x) * x;
    if (s == 0) return 0;
    bits += 0.5 * std::log2(static_cast<double>(s));
  }
  Integer modulus = 1, value = 0;
  std::uint32_t q = 2147483647u;
  while (true) {
    while (!isPrime32(q)) --q;
    std::uint32_t r = detModP(m, q);
    // CRT: value + modulus * t = r (mod q)
    std::uint32_t vm = static_cast<std::uint32_t>(static_cast<unsigned long>(value % q));
    std::uint32_t mm = static_cast<std::uint32_t>(static_cast<unsigned long>(modulus % q));
    std::uint32_t t = mulMod((r + q - vm) % q, invMod(mm, q), q);
    value += modulus * t;
    modulus *= q;
    --q;
    if (static_cast<double>(msb(modulus)) > bits + 2) break;
  }
  if (value > modulus / 2) value -= modulus;
  return value;
}

IntMatrix toIntMatrix(const I64Matrix& m) {
  IntMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto x : m[i]) r[i].emplace_back(x);
  return r;
}

RatMatrix toRatMatrix(const I64Matrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto x : m[i]) r[i].emplace_back(x);
  return r;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  RatMatrix c(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (b[l][j] != 0) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

std::vector<std::vector<Rational>> rationalNullspace(RatMatrix m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivotCols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (m[r][k] != 0) m[i][k] -= f * m[r][k];
    }
    pivotCols.push_back(c);
    ++r;
  }
  std::vector<char> isPivot(cols, 0);
  for (auto c : pivotCols) isPivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (isPivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivotCols.size(); ++i) v[pivotCols[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix rationalInverse(RatMatrix m) {
  std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, Rational(0));
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) throw NumericalFailure("matrix is singular");
    std::swap(m[piv], m[c]);
    Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = 0; k < 2 * n; ++k)
        if (m[c][k] != 0) m[i][k] -= f * m[c][k];
    }
  }
  RatMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(m[i].begin() + n, m[i].end());
  return out;
}

Inertia exactInertia(const IntMatrix& symmetric) {
  auto c = charPolyBerkowitz(symmetric);
  Inertia in;
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  in.zero = static_cast<int>(low);
  auto signChanges = [&](bool flip) {
    int changes = 0, last = 0;
    for (std::size_t i = low; i < c.size(); ++i) {
      int s = c[i].sign();
      if (flip && i % 2) s = -s;
      if (s == 0) continue;
      if (last && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  in.positive = signChanges(false);
  in.negative = signChanges(true);
  return in;
}

}  // namespace gcx
