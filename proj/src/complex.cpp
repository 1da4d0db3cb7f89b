#include "gcx/complex.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

#include "gcx/errors.hpp"

namespace gcx {

bool canonicalLess(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Complex::Complex(std::vector<Simplex> simplices) : simplices_(std::move(simplices)) {
  for (const auto& s : simplices_) {
    if (s.empty()) throw InvalidArgument("empty simplex");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0) throw InvalidArgument("negative vertex label");
      if (i && s[i - 1] >= s[i]) throw InvalidArgument("simplex vertices not strictly increasing");
    }
  }
  if (!std::is_sorted(simplices_.begin(), simplices_.end(), canonicalLess))
    std::sort(simplices_.begin(), simplices_.end(), canonicalLess);
  if (std::adjacent_find(simplices_.begin(), simplices_.end()) != simplices_.end())
    throw InvalidArgument("duplicate simplex");
  offsets_ = {0};
  std::size_t i = 0;
  for (std::size_t card = 1; i < simplices_.size(); ++card) {
    while (i < simplices_.size() && simplices_[i].size() == card) ++i;
    offsets_.push_back(i);
  }
}

std::size_t Complex::dimOffset(int d) const {
  if (d < 0) return 0;
  if (d + 1 >= static_cast<int>(offsets_.size())) return simplices_.size();
  return offsets_[d];
}

std::int64_t Complex::indexOf(const Simplex& s) const {
  int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d > dimension()) return -1;
  auto first = simplices_.begin() + dimOffset(d), last = simplices_.begin() + dimOffset(d + 1);
  auto it = std::lower_bound(first, last, s);
  if (it == last || *it != s) return -1;
  return it - simplices_.begin();
}

int Complex::vertexBound() const {
  int m = -1;
  for (std::size_t i = 0; i < dimCount(0); ++i) m = std::max(m, simplices_[i][0]);
  return m + 1;
}

namespace {

// Ordered extension: each clique is grown only by common neighbours larger than its
// last vertex, so every clique is emitted exactly once.
void extendCliques(const Graph& g, Simplex& current, const std::vector<int>& candidates,
                   std::vector<Simplex>& out, std::size_t cap) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    int v = candidates[i];
    current.push_back(v);
    if (out.size() >= cap)
      throw BoundExceeded("clique complex exceeds simplex cap " + std::to_string(cap));
    out.push_back(current);
    std::vector<int> next;
    const auto& nb = g.neighbors(v);
    std::set_intersection(candidates.begin() + i + 1, candidates.end(), nb.begin(), nb.end(),
                          std::back_inserter(next));
    if (!next.empty()) extendCliques(g, current, next, out, cap);
    current.pop_back();
  }
}

std::vector<Simplex> cliquesOn(const Graph& g, const std::vector<int>& vertices, std::size_t cap) {
  std::vector<Simplex> out;
  Simplex current;
  extendCliques(g, current, vertices, out, cap);
  return out;
}

}  // namespace

Complex cliqueComplex(const Graph& g, std::size_t simplexCap) {
  std::vector<int> all(g.vertexCount());
  for (int i = 0; i < g.vertexCount(); ++i) all[i] = i;
  return Complex(cliquesOn(g, all, simplexCap));
}

Complex inducedComplex(const Graph& g, const std::vector<int>& w, std::size_t simplexCap) {
  std::vector<int> vs(w);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (int v : vs)
    if (v < 0 || v >= g.vertexCount()) throw InvalidArgument("vertex out of range");
  return Complex(cliquesOn(g, vs, simplexCap));
}

Complex unitSphereComplex(const Graph& g, int v, std::size_t simplexCap) {
  if (v < 0 || v >= g.vertexCount()) throw InvalidArgument("invalid vertex " + std::to_string(v));
  return Complex(cliquesOn(g, g.neighbors(v), simplexCap));
}

namespace {

std::vector<Simplex> withVertex(const std::vector<Simplex>& base, int v) {
  std::vector<Simplex> out;
  out.reserve(base.size());
  for (const auto& x : base) {
    Simplex y(x);
    y.push_back(v);
    out.push_back(std::move(y));
  }
  return out;
}

void append(std::vector<Simplex>& dst, std::vector<Simplex>&& src) {
  dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
}

}  // namespace

// Cliques of G_n are the independent sets of C_n. Those avoiding n-1 are the
// independent sets of C_{n-1} plus the ones holding both 0 and n-2; those holding
// n-1 avoid 0 and n-2. Both extra families come from the complex of G_{n-2}.
Complex dualCycleComplex(int n, std::size_t simplexCap) {
  if (n < 4) throw InvalidArgument("dual cycle complex needs n >= 4");
  if (n > 90 || static_cast<std::size_t>(hyperFibonacci(n)) > simplexCap)
    throw BoundExceeded("complex of G_" + std::to_string(n) + " exceeds the simplex cap");
  std::vector<Simplex> prev2 = cliqueComplex(cycleComplement(4)).simplices();
  std::vector<Simplex> prev1 = cliqueComplex(cycleComplement(5)).simplices();
  if (n == 4) return Complex(prev2);
  for (int m = 6; m <= n; ++m) {
    std::vector<Simplex> cur(prev1);
    std::vector<Simplex> withZero, withoutZero;
    for (const auto& x : prev2) (x[0] == 0 ? withZero : withoutZero).push_back(x);
    append(cur, withVertex(withZero, m - 2));
    append(cur, withVertex(withoutZero, m - 1));
    cur.push_back({m - 1});
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return Complex(std::move(prev1));
}

Complex dualPathComplex(int n, std::size_t simplexCap) {
  if (n < 1) throw InvalidArgument("dual path complex needs n >= 1");
  std::size_t a = 0, b = 1;
  for (int m = 2; m <= n && b <= simplexCap; ++m) {
    std::size_t c = a + b + 1;
    a = b;
    b = c;
  }
  if (b > simplexCap) throw BoundExceeded("complex of G+_" + std::to_string(n) + " exceeds the simplex cap");
  std::vector<Simplex> prev2, prev1{{0}};
  for (int m = 2; m <= n; ++m) {
    std::vector<Simplex> cur(prev1);
    append(cur, withVertex(prev2, m - 1));
    cur.push_back({m - 1});
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return Complex(std::move(prev1));
}

std::vector<std::int64_t> fVector(const Complex& k) {
  std::vector<std::int64_t> f;
  for (int d = 0; d <= k.dimension(); ++d) f.push_back(static_cast<std::int64_t>(k.dimCount(d)));
  return f;
}

std::int64_t eulerCharacteristic(const std::vector<std::int64_t>& f) {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < f.size(); ++d) chi += d % 2 ? -f[d] : f[d];
  return chi;
}

std::int64_t eulerCharacteristic(const Complex& k) { return eulerCharacteristic(fVector(k)); }

std::int64_t hyperFibonacci(int n) {
  if (n < 0) throw InvalidArgument("hyper Fibonacci needs n >= 0");
  if (n > 90) throw BoundExceeded("hyper Fibonacci overflows 64 bits beyond n = 90");
  std::int64_t a = 1, b = 0;
  if (n == 0) return a;
  for (int i = 2; i <= n; ++i) {
    std::int64_t c = a + b + 1;
    a = b;
    b = c;
  }
  return b;
}

std::vector<Simplex> maximalSimplices(const Complex& k) {
  // A simplex is maximal iff no cofacet exists; mark facets of every simplex.
  std::vector<char> covered(k.size(), 0);
  for (std::size_t i = k.dimOffset(1); i < k.size(); ++i) {
    const auto& s = k[i];
    Simplex f(s.size() - 1);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      for (std::size_t a = 0, b = 0; a < s.size(); ++a)
        if (a != drop) f[b++] = s[a];
      auto j = k.indexOf(f);
      if (j >= 0) covered[j] = 1;
    }
  }
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (!covered[i]) out.push_back(k[i]);
  return out;
}

bool isDownwardClosed(const Complex& k) {
  for (std::size_t i = k.dimOffset(1); i < k.size(); ++i) {
    const auto& s = k[i];
    Simplex f(s.size() - 1);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      for (std::size_t a = 0, b = 0; a < s.size(); ++a)
        if (a != drop) f[b++] = s[a];
      if (k.indexOf(f) < 0) return false;
    }
  }
  return true;
}

Complex compactLabels(const Complex& k) {
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < k.dimCount(0); ++i) relabel.emplace(k[i][0], static_cast<int>(relabel.size()));
  std::vector<Simplex> out;
  out.reserve(k.size());
  for (const auto& s : k.simplices()) {
    Simplex t;
    for (int v : s) t.push_back(relabel.at(v));
    out.push_back(std::move(t));
  }
  return Complex(std::move(out));
}

Graph skeletonGraph(const Complex& k) {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = k.dimOffset(1); i < k.dimOffset(2); ++i) e.emplace_back(k[i][0], k[i][1]);
  return Graph(k.vertexBound(), e);
}

std::string complexToJson(const Complex& k) {
  nlohmann::json j = k.simplices();
  return j.dump();
}

namespace {

Rational inductiveOn(const Graph& g, const std::vector<int>& vs, std::map<std::vector<int>, Rational>& memo) {
  if (vs.empty()) return Rational(-1);
  auto it = memo.find(vs);
  if (it != memo.end()) return it->second;
  Rational sum = 0;
  for (int v : vs) {
    std::vector<int> sphere;
    const auto& nb = g.neighbors(v);
    std::set_intersection(vs.begin(), vs.end(), nb.begin(), nb.end(), std::back_inserter(sphere));
    sum += inductiveOn(g, sphere, memo);
  }
  Rational d = 1 + sum / static_cast<long>(vs.size());
  memo.emplace(vs, d);
  return d;
}

}  // namespace

Rational inductiveDimension(const Graph& g) {
  std::vector<int> all(g.vertexCount());
  for (int v = 0; v < g.vertexCount(); ++v) all[v] = v;
  std::map<std::vector<int>, Rational> memo;
  return inductiveOn(g, all, memo);
}

Rational dimensionExpectation(const Complex& k) {
  Integer f1 = 1, df1 = 0;
  auto f = fVector(k);
  for (std::size_t d = 0; d < f.size(); ++d) {
    f1 += f[d];
    df1 += Integer(f[d]) * static_cast<long>(d + 1);
  }
  return Rational(df1, f1);
}

}  // namespace gcx
