#include "gcx/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "json.hpp"

#include "gcx/complex.hpp"
#include "gcx/errors.hpp"

namespace gcx {

Graph::Graph(int n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  adj_.assign(n, {});
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("self-loop");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
}

std::size_t Graph::edgeCount() const {
  std::size_t s = 0;
  for (auto& a : adj_) s += a.size();
  return s / 2;
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_.at(u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < vertexCount(); ++u)
    for (int v : adj_[u])
      if (u < v) e.emplace_back(u, v);
  return e;
}

Graph& Graph::withMetadata(std::string family, std::map<std::string, std::string> params) {
  family_ = std::move(family);
  params_ = std::move(params);
  return *this;
}

Graph& Graph::withLabels(std::vector<std::int64_t> labels) {
  if (labels.size() != adj_.size()) throw InvalidArgument("label count mismatch");
  labels_ = std::move(labels);
  return *this;
}

namespace {

Graph tagged(Graph g, std::string family, std::map<std::string, std::string> params = {}) {
  g.withMetadata(std::move(family), std::move(params));
  return g;
}

std::string str(long long v) { return std::to_string(v); }

}  // namespace

Graph completeGraph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return tagged(Graph(n, e), "complete", {{"n", str(n)}});
}

Graph edgelessGraph(int n) { return tagged(Graph(n), "edgeless", {{"n", str(n)}}); }

Graph cycleGraph(int n) {
  if (n < 3) throw InvalidArgument("cycle graph needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return tagged(Graph(n, e), "cycle", {{"n", str(n)}});
}

Graph pathGraph(int n) {
  if (n < 1) throw InvalidArgument("path graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return tagged(Graph(n, e), "path", {{"n", str(n)}});
}

Graph starGraph(int spikes) {
  if (spikes < 0) throw InvalidArgument("negative spike count");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= spikes; ++i) e.emplace_back(0, i);
  return tagged(Graph(spikes + 1, e), "star", {{"spikes", str(spikes)}});
}

Graph wheelGraph(int rim) {
  if (rim < 3) throw InvalidArgument("wheel needs rim >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < rim; ++i) {
    e.emplace_back(0, i + 1);
    e.emplace_back(i + 1, (i + 1) % rim + 1);
  }
  return tagged(Graph(rim + 1, e), "wheel", {{"rim", str(rim)}});
}

Graph hypercubeGraph(int dim) {
  if (dim < 0 || dim > 16) throw InvalidArgument("hypercube dimension out of range");
  int n = 1 << dim;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!(v >> b & 1)) e.emplace_back(v, v | (1 << b));
  return tagged(Graph(n, e), "hypercube", {{"dim", str(dim)}});
}

Graph complement(const Graph& g) {
  int n = g.vertexCount();
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) e.emplace_back(i, j);
  Graph c(n, e);
  if (!g.labels().empty()) c.withLabels(g.labels());
  return c;
}

Graph disjointUnion(const Graph& a, const Graph& b) {
  int na = a.vertexCount();
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + na, v + na);
  return Graph(na + b.vertexCount(), e);
}

Graph zykovJoin(const Graph& a, const Graph& b) {
  int na = a.vertexCount(), nb = b.vertexCount();
  auto e = disjointUnion(a, b).edges();
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) e.emplace_back(i, na + j);
  return Graph(na + nb, e);
}

Graph inducedSubgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(g.vertexCount(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.vertexCount()) throw InvalidArgument("vertex out of range");
    if (index[v] >= 0) throw InvalidArgument("repeated vertex");
    index[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int w : g.neighbors(vertices[i]))
      if (index[w] > static_cast<int>(i)) e.emplace_back(static_cast<int>(i), index[w]);
  return Graph(static_cast<int>(vertices.size()), e);
}

Graph circulantGraph(int n, const std::vector<int>& gens) {
  if (n < 1) throw InvalidArgument("circulant needs n >= 1");
  std::set<int> s;
  for (int g : gens) {
    int r = ((g % n) + n) % n;
    if (r == 0) throw InvalidArgument("generator 0 (mod n) not allowed");
    s.insert(r);
    s.insert(n - r);
  }
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int d : s) e.emplace_back(i, (i + d) % n);
  std::string gs;
  for (int g : gens) gs += (gs.empty() ? "" : ",") + str(g);
  return tagged(Graph(n, e), "circulant", {{"n", str(n)}, {"gens", gs}});
}

// Element r^a s^b is stored at index a + n*b. Right multiplication by r moves a by
// (-1)^b, right multiplication by s flips b.
Graph dihedralCayleyGraph(int n) {
  if (n < 3) throw InvalidArgument("dihedral Cayley graph needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < n; ++a) {
      int v = a + n * b;
      int step = b == 0 ? 1 : -1;
      e.emplace_back(v, ((a + step) % n + n) % n + n * b);
      e.emplace_back(v, a + n * (1 - b));
    }
  return tagged(Graph(2 * n, e), "dihedral-cayley", {{"n", str(n)}});
}

Graph dihedralCayleyComplement(int n) {
  return tagged(complement(dihedralCayleyGraph(n)), "dihedral-complement", {{"n", str(n)}});
}

bool isPrime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Graph paleyGraph(int q) {
  if (!isPrime(q) || q % 4 != 1) throw InvalidArgument("Paley graph needs a prime q = 1 mod 4");
  std::vector<char> residue(q, 0);
  for (std::int64_t x = 1; x < q; ++x) residue[x * x % q] = 1;
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b)
      if (residue[(b - a) % q]) e.emplace_back(a, b);
  return tagged(Graph(q, e), "paley", {{"q", str(q)}});
}

int mobius(std::int64_t k) {
  if (k < 1) throw InvalidArgument("Moebius function needs k >= 1");
  int m = 1;
  for (std::int64_t p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    k /= p;
    if (k % p == 0) return 0;
    m = -m;
  }
  if (k > 1) m = -m;
  return m;
}

std::int64_t mertens(std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t k = 1; k <= n; ++k) s += mobius(k);
  return s;
}

Graph primeGraph(int n) {
  if (n < 2) throw InvalidArgument("prime graph needs n >= 2");
  std::vector<std::int64_t> labels;
  for (int k = 2; k <= n; ++k)
    if (mobius(k) != 0) labels.push_back(k);
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[j] % labels[i] == 0) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  Graph g(static_cast<int>(labels.size()), e);
  g.withLabels(labels);
  return tagged(g, "prime", {{"n", str(n)}});
}

Graph barycentricRefinement(const Graph& g) {
  Complex k = cliqueComplex(g);
  const auto& s = k.simplices();
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i].size() < s[j].size() && std::includes(s[j].begin(), s[j].end(), s[i].begin(), s[i].end()))
        e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return tagged(Graph(static_cast<int>(s.size()), e), "barycentric");
}

Graph cycleComplement(int n) {
  if (n < 0) throw InvalidArgument("negative n");
  Graph g = n < 3 ? Graph(n) : complement(cycleGraph(n));
  return tagged(g, "cycle-complement", {{"n", str(n)}});
}

Graph pathComplement(int n) {
  Graph g = n <= 0 ? Graph(0) : complement(pathGraph(n));
  return tagged(g, "path-complement", {{"n", str(n)}});
}

std::vector<std::vector<int>> connectedComponents(const Graph& g) {
  int n = g.vertexCount();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool isConnected(const Graph& g) { return connectedComponents(g).size() <= 1; }

bool isForest(const Graph& g) {
  return g.edgeCount() + connectedComponents(g).size() == static_cast<std::size_t>(g.vertexCount());
}

std::vector<std::vector<int>> distanceMatrix(const Graph& g) {
  int n = g.vertexCount();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (d[s][w] < 0) {
          d[s][w] = d[s][v] + 1;
          q.push(w);
        }
    }
  }
  return d;
}

namespace {

void requireBound(const Graph& g, int bound, const char* what) {
  if (g.vertexCount() > bound)
    throw BoundExceeded(std::string(what) + ": " + std::to_string(g.vertexCount()) +
                        " vertices exceeds exact-search bound " + std::to_string(bound));
}

using Mask = std::uint64_t;

int maxCliqueMask(const std::vector<Mask>& nb, Mask cand, int size, int best) {
  if (cand == 0) return std::max(size, best);
  if (size + __builtin_popcountll(cand) <= best) return best;
  while (cand) {
    if (size + __builtin_popcountll(cand) <= best) break;
    int v = __builtin_ctzll(cand);
    cand &= cand - 1;
    best = maxCliqueMask(nb, cand & nb[v], size + 1, best);
  }
  return best;
}

std::vector<Mask> neighborMasks(const Graph& g) {
  std::vector<Mask> nb(g.vertexCount(), 0);
  for (int v = 0; v < g.vertexCount(); ++v)
    for (int w : g.neighbors(v)) nb[v] |= Mask(1) << w;
  return nb;
}

}  // namespace

int cliqueNumber(const Graph& g, int bound) {
  requireBound(g, std::min(bound, 63), "clique number");
  if (g.vertexCount() == 0) return 0;
  Mask all = g.vertexCount() == 64 ? ~Mask(0) : (Mask(1) << g.vertexCount()) - 1;
  return maxCliqueMask(neighborMasks(g), all, 0, 0);
}

int independenceNumber(const Graph& g, int bound) {
  requireBound(g, std::min(bound, 63), "independence number");
  return cliqueNumber(complement(g), bound);
}

int chromaticNumber(const Graph& g, int bound) {
  requireBound(g, std::min(bound, 63), "chromatic number");
  int n = g.vertexCount();
  if (n == 0) return 0;
  // Order by decreasing degree so conflicts surface early.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(n, -1);
  for (int k = std::max(1, cliqueNumber(g, bound)); k <= n; ++k) {
    std::function<bool(int, int)> place = [&](int i, int used) -> bool {
      if (i == n) return true;
      int v = order[i];
      for (int c = 0; c < std::min(k, used + 1); ++c) {
        bool ok = true;
        for (int w : g.neighbors(v))
          if (color[w] == c) {
            ok = false;
            break;
          }
        if (!ok) continue;
        color[v] = c;
        if (place(i + 1, std::max(used, c + 1))) return true;
        color[v] = -1;
      }
      return false;
    };
    std::fill(color.begin(), color.end(), -1);
    if (place(0, 0)) return k;
  }
  return n;
}

bool isClawFree(const Graph& g) {
  for (int v = 0; v < g.vertexCount(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.adjacent(nb[a], nb[b])) continue;
        for (std::size_t c = b + 1; c < nb.size(); ++c)
          if (!g.adjacent(nb[a], nb[c]) && !g.adjacent(nb[b], nb[c])) return false;
      }
  }
  return true;
}

bool isStronglyRegular(const Graph& g) {
  int n = g.vertexCount();
  if (n == 0) return true;
  int k = g.degree(0);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != k) return false;
  int lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::vector<int> common;
      std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                            g.neighbors(v).end(), std::back_inserter(common));
      int c = static_cast<int>(common.size());
      int& slot = g.adjacent(u, v) ? lambda : mu;
      if (slot < 0) slot = c;
      else if (slot != c) return false;
    }
  return true;
}

MetricInvariants metricInvariants(const Graph& g, int exactSearchBound) {
  MetricInvariants m;
  int n = g.vertexCount();
  for (int v = 0; v < n; ++v) m.degreeSequence.push_back(g.degree(v));
  std::sort(m.degreeSequence.rbegin(), m.degreeSequence.rend());
  m.allDegreesEven = std::all_of(m.degreeSequence.begin(), m.degreeSequence.end(), [](int d) { return d % 2 == 0; });
  m.clawFree = isClawFree(g);
  if (isConnected(g)) {
    auto d = distanceMatrix(g);
    int diam = 0;
    std::int64_t w = 0;
    Rational h = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        diam = std::max(diam, d[i][j]);
        w += d[i][j];
        h += Rational(1, d[i][j]);
      }
    m.diameter = diam;
    m.wiener = w / 2;
    m.harary = h;
  }
  if (n <= exactSearchBound && n <= 63) {
    m.independenceNumber = independenceNumber(g, exactSearchBound);
    m.cliqueNumber = cliqueNumber(g, exactSearchBound);
    m.chromaticNumber = chromaticNumber(g, exactSearchBound);
  }
  return m;
}

namespace {
std::optional<std::vector<int>> hamiltonianOrder(const Graph& g);
}

std::optional<std::vector<int>> cycleComplementHamiltonianWitness(int n) {
  for (int a = 2; a < n - 1; ++a) {
    if (std::gcd(a, n) != 1) continue;
    std::vector<int> order(n);
    for (int k = 0; k < n; ++k) order[k] = static_cast<int>(static_cast<std::int64_t>(k) * a % n);
    return order;
  }
  // only n = 6 has no usable multiplier; search there
  if (n >= 5 && n <= 12) return hamiltonianOrder(cycleComplement(n));
  return std::nullopt;
}

bool isHamiltonianCycle(const Graph& g, const std::vector<int>& order) {
  int n = g.vertexCount();
  if (static_cast<int>(order.size()) != n || n < 3) return false;
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!g.adjacent(order[i], order[(i + 1) % n])) return false;
  return true;
}

namespace {

std::optional<std::vector<int>> hamiltonianOrder(const Graph& g) {
  int n = g.vertexCount();
  if (n < 3) return std::nullopt;
  std::vector<char> used(n, 0);
  std::vector<int> order{0};
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (static_cast<int>(order.size()) == n) return g.adjacent(v, 0);
    for (int w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      order.push_back(w);
      if (extend(w)) return true;
      order.pop_back();
      used[w] = 0;
    }
    return false;
  };
  used[0] = 1;
  if (!extend(0)) return std::nullopt;
  return order;
}

}  // namespace

bool isHamiltonian(const Graph& g, int bound) {
  requireBound(g, std::min(bound, 63), "Hamiltonicity");
  return hamiltonianOrder(g).has_value();
}

bool isomorphic(const Graph& a, const Graph& b) {
  int n = a.vertexCount();
  if (n != b.vertexCount() || a.edgeCount() != b.edgeCount()) return false;
  if (n > 10) throw BoundExceeded("isomorphism test limited to 10 vertices");
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (a.degree(v) != b.degree(p[v])) ok = false;
      for (int w : a.neighbors(v))
        if (!b.adjacent(p[v], p[w])) {
          ok = false;
          break;
        }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::string graphToJson(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.vertexCount();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  return j.dump();
}

Graph graphFromJson(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> e;
    for (auto& pr : j.at("edges")) e.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
    return Graph(n, e);
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("bad graph JSON: ") + ex.what());
  }
}

}  // namespace gcx
