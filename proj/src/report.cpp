#include "gcx/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <regex>
#include <thread>

#include "json.hpp"

#include "gcx/curvature.hpp"
#include "gcx/errors.hpp"
#include "gcx/fixedpoint.hpp"
#include "gcx/hodge.hpp"
#include "gcx/homotopy.hpp"
#include "gcx/kirchhoff.hpp"
#include "gcx/wu.hpp"

namespace gcx {

using Json = nlohmann::ordered_json;

namespace {

int gThreads = 0;

// Runs body(i) for i in [0, count) on the configured number of threads.
// The first exception thrown (lowest index) is rethrown on the caller.
void parallelFor(int count, const std::function<void(int)>& body) {
  int t = threadCount();
  if (t <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (int i; (i = next++) < count;) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < std::min(t, count); ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string str(std::int64_t x) { return std::to_string(x); }
std::string str(const Integer& x) { return x.str(); }

// Integers print without denominator, everything else as p/q.
std::string exact(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return toFractionString(r);
}

Json cellJson(const std::string& c) {
  static const std::regex integer("-?[0-9]+");
  static const std::regex decimal("-?[0-9]*\\.?[0-9]+([eE][-+]?[0-9]+)?");
  if (c.empty()) return nullptr;
  if (std::regex_match(c, integer)) {
    if (c.size() < 18) return std::stoll(c);
    return c;
  }
  if (std::regex_match(c, decimal)) return std::stod(c);
  return c;
}

template <class T>
Json vecJson(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x);
  return a;
}

std::vector<std::string> padded(std::vector<std::string> cells, std::size_t width) {
  cells.resize(width);
  return cells;
}

// Rows whose trailing columns are a ragged integer vector.
Table raggedTable(std::vector<std::string> lead, const std::string& prefix, int firstIndex,
                  const std::vector<std::vector<std::string>>& heads,
                  const std::vector<std::vector<std::int64_t>>& tails) {
  std::size_t width = 0;
  for (const auto& t : tails) width = std::max(width, t.size());
  Table tab;
  tab.columns = lead;
  for (std::size_t i = 0; i < width; ++i) tab.columns.push_back(prefix + std::to_string(firstIndex + static_cast<int>(i)));
  for (std::size_t r = 0; r < heads.size(); ++r) {
    auto row = heads[r];
    for (auto x : tails[r]) row.push_back(str(x));
    tab.rows.push_back(padded(row, tab.columns.size()));
  }
  return tab;
}

void requireRange(int lo, int maxN, int hi) {
  if (maxN < lo) throw InvalidArgument("max-n must be at least " + std::to_string(lo));
  if (maxN > hi) throw BoundExceeded("max-n is capped at " + std::to_string(hi) + " for this table");
}

}  // namespace

Format parseFormat(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw InvalidArgument("format must be csv or json");
}

std::string formatDouble(double x) {
  if (x == 0) x = 0;  // no negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string Table::csv() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return out;
}

std::string Table::json() const {
  Json a = Json::array();
  for (const auto& r : rows) {
    Json o = Json::object();
    for (std::size_t i = 0; i < columns.size(); ++i) o[columns[i]] = cellJson(i < r.size() ? r[i] : "");
    a.push_back(o);
  }
  return a.dump(2) + "\n";
}

void setThreadCount(int threads) {
  if (threads < 0) throw InvalidArgument("thread count must be >= 0");
  gThreads = threads;
}

int threadCount() {
  if (gThreads > 0) return gThreads;
  return std::max(1u, std::thread::hardware_concurrency());
}

Graph buildFamily(const FamilySpec& s) {
  const auto& f = s.family;
  if (f == "cycle-complement") return cycleComplement(s.n);
  if (f == "path-complement") return pathComplement(s.n);
  if (f == "circulant") {
    if (s.gens.empty()) throw InvalidArgument("circulant needs --gens");
    return circulantGraph(s.n, s.gens);
  }
  if (f == "dihedral-complement") return dihedralCayleyComplement(s.n);
  if (f == "paley") return paleyGraph(s.q ? s.q : s.n);
  if (f == "prime") return primeGraph(s.n);
  if (f == "barycentric-complement") {
    if (s.n < 1) throw InvalidArgument("barycentric-complement needs n >= 1");
    return complement(barycentricRefinement(completeGraph(s.n)));
  }
  throw InvalidArgument("unknown family: " + f);
}

Complex buildComplex(const FamilySpec& s, std::size_t cap) {
  if (s.family == "cycle-complement" && s.n >= 4) return dualCycleComplex(s.n, cap);
  if (s.family == "path-complement" && s.n >= 1) return dualPathComplex(s.n, cap);
  return cliqueComplex(buildFamily(s), cap);
}

Table fvectorTable(int maxN) {
  requireRange(0, maxN, 40);
  std::vector<std::vector<std::int64_t>> f(maxN + 1);
  parallelFor(maxN + 1, [&](int n) { f[n] = fVector(cliqueComplex(cycleComplement(n))); });
  std::size_t width = 0;
  for (const auto& x : f) width = std::max(width, x.size());
  Table t;
  t.columns = {"n"};
  for (std::size_t d = 0; d < width; ++d) t.columns.push_back("f" + std::to_string(d));
  t.columns.push_back("hyper_fibonacci");
  t.columns.push_back("chi");
  for (int n = 0; n <= maxN; ++n) {
    std::vector<std::string> row{str(n)};
    for (std::size_t d = 0; d < width; ++d) row.push_back(d < f[n].size() ? str(f[n][d]) : "");
    row.push_back(str(hyperFibonacci(n)));
    row.push_back(str(eulerCharacteristic(f[n])));
    t.rows.push_back(row);
  }
  return t;
}

Table dimsTable(bool path, int maxN) {
  requireRange(4, maxN, 24);
  int count = maxN - 3;
  std::vector<std::vector<std::string>> rows(count);
  parallelFor(count, [&](int i) {
    int n = i + 4;
    Graph g = path ? pathComplement(n) : cycleComplement(n);
    Complex k = path ? dualPathComplex(n) : dualCycleComplex(n);
    Rational ind = inductiveDimension(g);
    Rational de = 2 * dimensionExpectation(k) - 1;
    auto b = bettiVector(k);
    int coho = 0;
    for (std::size_t d = 0; d < b.size(); ++d)
      if (b[d] != 0) coho = static_cast<int>(d);
    rows[i] = {str(n), exact(ind), formatDouble(toDouble(ind)), exact(de), formatDouble(toDouble(de)), str(coho),
               str(k.dimension())};
  });
  Table t;
  t.columns = {"n", "ind_dim", "ind_dim_value", "dim_exp", "dim_exp_value", "coho_dim", "max_dim"};
  t.rows = rows;
  return t;
}

Table bettiTable(bool path, int maxN) {
  int lo = path ? 4 : 3;
  requireRange(lo, maxN, 26);
  int count = maxN - lo + 1;
  std::vector<std::vector<std::string>> heads(count);
  std::vector<std::vector<std::int64_t>> tails(count);
  parallelFor(count, [&](int i) {
    int n = lo + i;
    Complex k = path ? dualPathComplex(n) : (n >= 4 ? dualCycleComplex(n) : cliqueComplex(cycleComplement(n)));
    heads[i] = {str(n), str(eulerCharacteristic(k))};
    tails[i] = bettiVector(k);
  });
  return raggedTable({"n", "chi"}, "b", 0, heads, tails);
}

Table wuTable(int maxN) {
  requireRange(4, maxN, 24);
  int count = maxN - 3;
  std::vector<std::vector<std::string>> rows(count);
  parallelFor(count, [&](int i) {
    int n = i + 4;
    Complex k = dualCycleComplex(n);
    rows[i] = {str(n), str(eulerCharacteristic(k)), str(wuCharacteristic(k, 2)), str(wuCharacteristic(k, 3)),
               str(wuCharacteristic(k, 4))};
  });
  Table t;
  t.columns = {"n", "chi", "omega2", "omega3", "omega4"};
  t.rows = rows;
  return t;
}

Table wuBettiTable(int maxN) {
  requireRange(3, maxN, 12);
  int count = maxN - 2;
  std::vector<std::vector<std::string>> heads(count);
  std::vector<std::vector<std::int64_t>> tails(count);
  parallelFor(count, [&](int i) {
    int n = i + 3;
    Complex k = n >= 4 ? dualCycleComplex(n) : cliqueComplex(cycleComplement(n));
    heads[i] = {str(n), str(wuCharacteristic(k, 2))};
    tails[i] = wuBetti(k);
  });
  // columns are pair cardinalities, starting at 2
  return raggedTable({"n", "omega2"}, "c", 2, heads, tails);
}

Table treeForestTable(int maxN) {
  requireRange(4, maxN, 40);
  int count = maxN - 3;
  std::vector<std::vector<std::string>> rows(count);
  parallelFor(count, [&](int i) {
    int n = i + 4;
    Graph a = cycleComplement(n), b = pathComplement(n);
    rows[i] = {str(n), str(rootedTreeCount(a)), str(rootedForestCount(a)), str(rootedTreeCount(b)),
               str(rootedForestCount(b))};
  });
  Table t;
  t.columns = {"n", "tree_cycle", "forest_cycle", "tree_path", "forest_path"};
  t.rows = rows;
  return t;
}

namespace {

void appendLefschetzRows(Table& t, const LefschetzRow& row, bool printedOrder) {
  int n = row.n;
  std::string avg = exact(row.average);
  std::vector<int> rot(n), refl(n);
  for (int j = 0; j < n; ++j) rot[j] = refl[j] = j;
  if (printedOrder) {
    rot = printedRotationColumns(n);
    refl = printedReflectionColumns(n);
  }
  for (int j = 0; j < n; ++j) t.rows.push_back({str(n), "rot", str(j), str(row.rotations[rot[j]]), avg});
  for (int j = 0; j < n; ++j) t.rows.push_back({str(n), "refl", str(j), str(row.reflections[refl[j]]), avg});
}

}  // namespace

Table lefschetzCycleTable(int maxN, bool printedOrder) {
  requireRange(4, maxN, 30);
  int count = maxN - 3;
  std::vector<LefschetzRow> rows(count);
  parallelFor(count, [&](int i) { rows[i] = dihedralLefschetz(i + 4); });
  Table t;
  t.columns = {"n", "kind", "j", "value", "average"};
  for (const auto& r : rows) appendLefschetzRows(t, r, printedOrder);
  return t;
}

namespace {

std::vector<std::string> pathLefschetzRow(int n) {
  Complex k = dualPathComplex(n);
  std::vector<std::int64_t> v;
  for (const auto& a : pathComplementAutomorphisms(n)) v.push_back(lefschetzNumber(k, a.perm));
  Rational avg(v[0] + v[1], 2);
  return {str(n), str(v[0]), str(v[1]), exact(avg)};
}

}  // namespace

Table lefschetzPathTable(int maxN) {
  requireRange(4, maxN, 30);
  int count = maxN - 3;
  std::vector<std::vector<std::string>> rows(count);
  parallelFor(count, [&](int i) { rows[i] = pathLefschetzRow(i + 4); });
  Table t;
  t.columns = {"n", "identity", "reversal", "average"};
  t.rows = rows;
  return t;
}

Table dihedralBettiTable(int maxN) {
  requireRange(3, maxN, 16);
  int count = maxN - 3;
  if (count < 1) throw InvalidArgument("max-n must be at least 4");
  std::vector<std::vector<std::string>> heads(count);
  std::vector<std::vector<std::int64_t>> tails(count);
  parallelFor(count, [&](int i) {
    int n = i + 4;
    Complex k = cliqueComplex(dihedralCayleyComplement(n));
    heads[i] = {str(n), str(eulerCharacteristic(k))};
    tails[i] = bettiVector(k);
  });
  return raggedTable({"n", "chi"}, "b", 0, heads, tails);
}

std::vector<std::string> tableNames() {
  return {"fvector-table", "dims-cycle",     "dims-path",      "betti-cycle",    "betti-path",    "wu-table",
          "wu-betti",      "tree-forest",    "lefschetz-cycle", "lefschetz-path", "dihedral-betti"};
}

Table namedTable(const std::string& name, int maxN, bool printedOrder) {
  auto pick = [&](int def) { return maxN < 0 ? def : maxN; };
  if (name == "fvector-table") return fvectorTable(pick(11));
  if (name == "dims-cycle") return dimsTable(false, pick(14));
  if (name == "dims-path") return dimsTable(true, pick(14));
  if (name == "betti-cycle") return bettiTable(false, pick(20));
  if (name == "betti-path") return bettiTable(true, pick(21));
  if (name == "wu-table") return wuTable(pick(18));
  if (name == "wu-betti") return wuBettiTable(pick(11));
  if (name == "tree-forest") return treeForestTable(pick(10));
  if (name == "lefschetz-cycle") return lefschetzCycleTable(pick(24), printedOrder);
  if (name == "lefschetz-path") return lefschetzPathTable(pick(18));
  if (name == "dihedral-betti") return dihedralBettiTable(pick(12));
  throw InvalidArgument("unknown table: " + name);
}

std::string familyReport(const FamilySpec& s, Format f) {
  Graph g = buildFamily(s);
  if (f == Format::Json) return graphToJson(g) + "\n";
  Table t;
  t.columns = {"u", "v"};
  for (auto [u, v] : g.edges()) t.rows.push_back({str(u), str(v)});
  return t.csv();
}

std::string fvectorReport(const FamilySpec& s, Format f, std::size_t cap) {
  auto fv = fVector(buildComplex(s, cap));
  Table t;
  t.columns = {"dim", "count"};
  for (std::size_t d = 0; d < fv.size(); ++d) t.rows.push_back({str(static_cast<std::int64_t>(d)), str(fv[d])});
  return t.render(f);
}

std::string bettiReport(const FamilySpec& s, Format f, std::size_t cap) {
  auto b = bettiVector(buildComplex(s, cap));
  Table t;
  t.columns = {"dim", "betti"};
  for (std::size_t d = 0; d < b.size(); ++d) t.rows.push_back({str(static_cast<std::int64_t>(d)), str(b[d])});
  return t.render(f);
}

std::string curvatureReport(const FamilySpec& s, Format f) {
  std::vector<Rational> k;
  if (s.family == "path-complement" && s.n >= 1) k = fastPathCurvatures(s.n);
  else k = curvatureProfile(buildFamily(s)).values;
  Table t;
  t.columns = {"vertex", "numerator", "denominator", "value"};
  for (std::size_t v = 0; v < k.size(); ++v)
    t.rows.push_back({str(static_cast<std::int64_t>(v)), numerator(k[v]).str(), denominator(k[v]).str(),
                      formatDouble(toDouble(k[v]))});
  return t.render(f);
}

std::string renormReport(int n, Format f) {
  Table t;
  t.columns = {"x", "value", "residue"};
  for (int l = 0; l < 6; ++l)
    for (const auto& p : renormalizationSample(n, l)) t.rows.push_back({formatDouble(p.x), formatDouble(p.value), str(l)});
  return t.render(f);
}

std::string lefschetzReport(const FamilySpec& s, Format f, bool printedOrder) {
  Table t;
  if (s.family == "cycle-complement") {
    t.columns = {"n", "kind", "j", "value", "average"};
    appendLefschetzRows(t, dihedralLefschetz(s.n), printedOrder);
  } else if (s.family == "path-complement") {
    if (s.n < 2) throw InvalidArgument("path-complement Lefschetz needs n >= 2");
    auto r = pathLefschetzRow(s.n);
    t.columns = {"n", "kind", "j", "value", "average"};
    t.rows.push_back({r[0], "id", "0", r[1], r[3]});
    t.rows.push_back({r[0], "rev", "0", r[2], r[3]});
  } else {
    throw InvalidArgument("lefschetz supports cycle-complement and path-complement");
  }
  return t.render(f);
}

std::string wuReport(const FamilySpec& s, Format f, std::size_t cap) {
  Complex k = buildComplex(s, cap);
  std::string n = str(k.vertexBound());
  std::string w2 = str(wuCharacteristic(k, 2)), w3 = str(wuCharacteristic(k, 3)), w4 = str(wuCharacteristic(k, 4));
  if (f == Format::Csv) {
    Table t;
    t.columns = {"n", "omega2", "omega3", "omega4"};
    t.rows.push_back({n, w2, w3, w4});
    return t.csv();
  }
  Json o = Json::object();
  o["n"] = cellJson(n);
  o["omega2"] = cellJson(w2);
  o["omega3"] = cellJson(w3);
  o["omega4"] = cellJson(w4);
  o["wu_betti_from_cardinality"] = 2;
  o["wu_betti"] = vecJson(wuBetti(k));
  return o.dump(2) + "\n";
}

std::string treesReport(const FamilySpec& s, Format f) {
  Graph g = buildFamily(s);
  Integer trees = rootedTreeCount(g), forests = rootedForestCount(g);
  Table t;
  t.columns = {"n", "trees", "forests", "ratio"};
  std::string ratio = trees == 0 ? "" : formatDouble(toDouble(Rational(forests, trees)));
  t.rows.push_back({str(g.vertexCount()), trees.str(), forests.str(), ratio});
  return t.render(f);
}

std::string zetaReport(const FamilySpec& s, Format f) {
  Graph g = buildFamily(s);
  auto ev = nonzeroKirchhoffEigenvalues(g);
  Table t;
  t.columns = {"s", "zeta"};
  for (int p = 1; p <= 8; ++p) t.rows.push_back({str(p), formatDouble(spectralZeta(ev, p))});
  if (f == Format::Csv) return t.csv();
  Json o = Json::object();
  o["zeta"] = Json::parse(t.json());
  o["ratio_zeta"] = zetaForestTreeRatio(ev);
  if (isConnected(g)) o["ratio_det"] = toDouble(treeForestRatio(g));
  return o.dump(2) + "\n";
}

std::string spectrumReport(const FamilySpec& s, Format f, std::size_t cap) {
  Graph g = buildFamily(s);
  Table t;
  t.columns = {"operator", "dim", "index", "value"};
  auto kirch = kirchhoffSpectrum(g);
  for (std::size_t i = 0; i < kirch.size(); ++i)
    t.rows.push_back({"kirchhoff", "", str(static_cast<std::int64_t>(i)), formatDouble(kirch[i])});
  auto blocks = hodgeBlockSpectra(buildComplex(s, cap));
  for (std::size_t d = 0; d < blocks.size(); ++d)
    for (std::size_t i = 0; i < blocks[d].size(); ++i)
      t.rows.push_back({"hodge", str(static_cast<std::int64_t>(d)), str(static_cast<std::int64_t>(i)),
                        formatDouble(std::abs(blocks[d][i]) < 1e-9 ? 0.0 : blocks[d][i])});
  return t.render(f);
}

std::string classifyReport(const FamilySpec& s, Format f) {
  Graph g = buildFamily(s);
  auto c = classifyHomotopyType(g);
  if (f == Format::Csv) {
    Table t;
    t.columns = {"class", "certified"};
    t.rows.push_back({c.toString(), c.certificate ? "yes" : "no"});
    return t.csv();
  }
  Json o = Json::object();
  Json in = Json::object();
  in["family"] = s.family;
  in["n"] = s.n;
  if (!s.gens.empty()) in["gens"] = vecJson(s.gens);
  if (s.q) in["q"] = s.q;
  o["input"] = in;
  o["class"] = c.toString();
  o["betti"] = vecJson(c.betti);
  if (c.certificate) {
    Json cert = Json::object();
    cert["removal_sequence"] = vecJson(c.certificate->sequence);
    cert["survivor"] = c.certificate->survivor;
    o["certificate"] = cert;
  }
  return o.dump(2) + "\n";
}

}  // namespace gcx
