#include "gcx/homotopy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gcx/complex.hpp"
#include "gcx/errors.hpp"
#include "gcx/hodge.hpp"

namespace gcx {

namespace {

using VSet = std::vector<std::uint64_t>;

VSet makeSet(int n) { return VSet((n + 63) / 64, 0); }
bool has(const VSet& s, int v) { return s[v >> 6] >> (v & 63) & 1; }
void put(VSet& s, int v) { s[v >> 6] |= std::uint64_t(1) << (v & 63); }
void drop(VSet& s, int v) { s[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }

std::vector<int> members(const VSet& s) {
  std::vector<int> out;
  for (std::size_t w = 0; w < s.size(); ++w)
    for (std::uint64_t b = s[w]; b; b &= b - 1) out.push_back(static_cast<int>(w * 64 + __builtin_ctzll(b)));
  return out;
}

class ContractionSearch {
 public:
  ContractionSearch(const Graph& g, int depth) : g_(g), depth_(depth) {}

  // Removal order for the subset, empty optional if not found.
  std::optional<std::vector<int>> run(const VSet& s) {
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
    auto r = search(s);
    memo_[s] = r;
    return r;
  }

 private:
  std::optional<std::vector<int>> search(const VSet& s) {
    auto vs = members(s);
    if (vs.empty()) return std::nullopt;
    if (vs.size() == 1) return std::vector<int>{};
    // A cone is contractible: strip everything but the apex.
    for (int a : vs) {
      bool apex = true;
      for (int v : vs)
        if (v != a && !g_.adjacent(a, v)) {
          apex = false;
          break;
        }
      if (apex) {
        std::vector<int> seq;
        for (int v : vs)
          if (v != a) seq.push_back(v);
        return seq;
      }
    }
    // Euler characteristic must be 1.
    if (eulerCharacteristic(inducedComplex(g_, vs)) != 1) return std::nullopt;
    int tried = 0;
    for (int x : vs) {
      VSet sphere = makeSet(g_.vertexCount());
      for (int w : g_.neighbors(x))
        if (has(s, w)) put(sphere, w);
      if (!run(sphere)) continue;
      VSet rest = s;
      drop(rest, x);
      auto sub = run(rest);
      if (sub) {
        std::vector<int> seq{x};
        seq.insert(seq.end(), sub->begin(), sub->end());
        return seq;
      }
      if (++tried >= depth_) break;
    }
    return std::nullopt;
  }

  const Graph& g_;
  int depth_;
  std::map<VSet, std::optional<std::vector<int>>> memo_;
};

}  // namespace

ContractibilityResult isContractible(const Graph& g, int backtrackDepth) {
  ContractibilityResult r;
  if (g.vertexCount() == 0) return r;
  ContractionSearch search(g, std::max(1, backtrackDepth));
  VSet all = makeSet(g.vertexCount());
  for (int v = 0; v < g.vertexCount(); ++v) put(all, v);
  auto seq = search.run(all);
  if (!seq) return r;
  r.contractible = true;
  r.sequence = *seq;
  VSet left = all;
  for (int v : r.sequence) drop(left, v);
  r.survivor = members(left).front();
  return r;
}

bool checkContractionCertificate(const Graph& g, const ContractibilityResult& r) {
  if (!r.contractible) return false;
  VSet left = makeSet(g.vertexCount());
  for (int v = 0; v < g.vertexCount(); ++v) put(left, v);
  for (int x : r.sequence) {
    if (x < 0 || x >= g.vertexCount() || !has(left, x)) return false;
    std::vector<int> sphere;
    for (int w : g.neighbors(x))
      if (has(left, w)) sphere.push_back(w);
    // Unit spheres met along a certificate are certified by their own search.
    if (!isContractible(inducedSubgraph(g, sphere)).contractible) return false;
    drop(left, x);
  }
  auto rest = members(left);
  return rest.size() == 1 && rest[0] == r.survivor;
}

std::string HomotopyClass::toString() const {
  switch (tag) {
    case Tag::Point: return "point";
    case Tag::Sphere: return "sphere(" + std::to_string(dim) + ")";
    case Tag::Wedge: return "wedge(" + std::to_string(dim) + "," + std::to_string(count) + ")";
    default: return "other";
  }
}

HomotopyClass pointClass() {
  HomotopyClass c;
  c.tag = HomotopyClass::Tag::Point;
  return c;
}

HomotopyClass sphereClass(int d) {
  HomotopyClass c;
  c.tag = HomotopyClass::Tag::Sphere;
  c.dim = d;
  c.count = 1;
  return c;
}

HomotopyClass wedgeClass(int d, int m) {
  HomotopyClass c;
  c.tag = HomotopyClass::Tag::Wedge;
  c.dim = d;
  c.count = m;
  return c;
}

HomotopyClass classifyHomotopyType(const Graph& g, int backtrackDepth) {
  HomotopyClass c;
  if (g.vertexCount() == 0) {
    c = sphereClass(-1);
    return c;
  }
  c.betti = bettiVector(cliqueComplex(g));
  // reduced Betti numbers
  std::vector<std::int64_t> red(c.betti);
  red[0] -= 1;
  std::vector<int> nz;
  for (std::size_t i = 0; i < red.size(); ++i)
    if (red[i] != 0) nz.push_back(static_cast<int>(i));
  if (nz.empty()) {
    auto cert = isContractible(g, backtrackDepth);
    if (cert.contractible) {
      auto b = c.betti;
      c = pointClass();
      c.betti = b;
      c.certificate = cert;
    }
    return c;
  }
  if (nz.size() == 1) {
    int d = nz[0];
    auto b = c.betti;
    c = red[d] == 1 ? sphereClass(d) : wedgeClass(d, static_cast<int>(red[d]));
    c.betti = b;
  }
  return c;
}

namespace {

// Suspension count and whether a cone showed up, for the independence complex.
HomotopyClass foldForest(const Graph& f) {
  int n = f.vertexCount();
  if (n == 0) return sphereClass(-1);
  for (int v = 0; v < n; ++v)
    if (f.degree(v) == 0) return pointClass();
  for (int l = 0; l < n; ++l) {
    if (f.degree(l) != 1) continue;
    int u = f.neighbors(l)[0];
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (v != u && !f.adjacent(u, v)) keep.push_back(v);
    auto inner = foldForest(inducedSubgraph(f, keep));
    if (inner.tag == HomotopyClass::Tag::Point) return inner;
    return sphereClass(inner.dim + 1);
  }
  throw InternalError("forest without leaves or isolated vertices");
}

}  // namespace

HomotopyClass forestComplementPrediction(const Graph& forest) {
  if (!isForest(forest)) throw InvalidArgument("input graph is not a forest");
  return foldForest(forest);
}

ManifoldReport isHomotopyManifold(const Graph& g, int d, int backtrackDepth) {
  ManifoldReport r;
  bool ok = true, unknown = false;
  for (int v = 0; v < g.vertexCount(); ++v) {
    auto c = classifyHomotopyType(inducedSubgraph(g, g.neighbors(v)), backtrackDepth);
    bool good = c.tag == HomotopyClass::Tag::Point || (c.tag == HomotopyClass::Tag::Sphere && c.dim == d - 1);
    bool undecided = c.tag == HomotopyClass::Tag::Other && !c.betti.empty() && [&] {
      auto red = c.betti;
      red[0] -= 1;
      return std::all_of(red.begin(), red.end(), [](std::int64_t x) { return x == 0; });
    }();
    if (undecided) unknown = true;
    else if (!good) ok = false;
    r.spheres.push_back(std::move(c));
  }
  if (!ok) r.verdict = false;
  else if (!unknown) r.verdict = true;
  return r;
}

GenusResult sphereIntersectionGenus(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) throw InvalidArgument("need at least one vertex");
  std::set<int> distinct(vertices.begin(), vertices.end());
  if (distinct.size() != vertices.size()) throw InvalidArgument("vertices must be distinct");
  std::vector<int> common = g.neighbors(vertices[0]);
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    std::vector<int> next;
    const auto& nb = g.neighbors(vertices[i]);
    std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(next));
    common.swap(next);
  }
  GenusResult r;
  r.empty = common.empty();
  r.genus = 1 - eulerCharacteristic(inducedComplex(g, common));
  return r;
}

namespace {

// AHU encoding of a tree rooted at r.
std::string encode(const Graph& t, int r, int parent) {
  std::vector<std::string> kids;
  for (int w : t.neighbors(r))
    if (w != parent) kids.push_back(encode(t, w, r));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

std::string canonicalTree(const Graph& t) {
  int n = t.vertexCount();
  if (n <= 1) return "()";
  // centres by repeated leaf stripping
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    std::vector<int> next;
    left -= static_cast<int>(layer.size());
    for (int v : layer)
      for (int w : t.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer.swap(next);
  }
  std::string best;
  for (int c : layer) {
    auto s = encode(t, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

std::vector<Graph> enumerateTrees(int n) {
  if (n < 1) throw InvalidArgument("trees need n >= 1");
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Graph> next;
    for (const auto& t : level)
      for (int v = 0; v < t.vertexCount(); ++v) {
        auto e = t.edges();
        e.emplace_back(v, m - 1);
        Graph bigger(m, e);
        next.emplace(canonicalTree(bigger), bigger);
      }
    level.clear();
    for (auto& [key, g] : next) level.push_back(g);
  }
  return level;
}

}  // namespace gcx
