#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcx/complex.hpp"
#include "gcx/curvature.hpp"
#include "gcx/fixedpoint.hpp"
#include "gcx/hodge.hpp"
#include "gcx/homotopy.hpp"
#include "gcx/kirchhoff.hpp"
#include "gcx/polynomial.hpp"
#include "gcx/report.hpp"
#include "gcx/wu.hpp"

using namespace gcx;
using nlohmann::json;

namespace {

using Vec = std::vector<std::int64_t>;

// Collects failed clauses for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& a, const B& b, const std::string& what) {
    expect(a == b, what);
  }
};

std::string join(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Vec trimZeros(Vec v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

Graph randomGraph(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> size(lo, hi);
  std::uniform_real_distribution<double> dens(0.2, 0.8);
  int n = size(rng);
  std::bernoulli_distribution coin(dens(rng));
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

Complex cycleFamily(int n) { return n >= 4 ? dualCycleComplex(n) : cliqueComplex(cycleComplement(n)); }

const int kCycleChi[6] = {-1, 0, 2, 3, 2, 0};
const int kPathChi[6] = {0, 1, 2, 2, 1, 0};

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Check criterion1(const json& ref) {
  Check c;
  auto t = fvectorTable(11);
  for (int n = 0; n <= 11; ++n) {
    const auto& r = ref["fvector"][std::to_string(n)];
    Vec f;
    for (std::size_t i = 1; i + 2 < t.columns.size(); ++i)
      if (!t.rows[n][i].empty()) f.push_back(std::stoll(t.rows[n][i]));
    c.equal(f, r["f"].get<Vec>(), "f-vector row " + std::to_string(n));
    c.equal(std::stoll(t.rows[n][t.columns.size() - 2]), r["hyper_fibonacci"].get<std::int64_t>(),
            "F_n row " + std::to_string(n));
    c.equal(std::stoll(t.rows[n].back()), r["chi"].get<std::int64_t>(), "chi row " + std::to_string(n));
  }
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 4; n <= 24; ++n)
    c.equal(static_cast<std::int64_t>(dualCycleComplex(n).size()), hyperFibonacci(n), "simplex count n=" + std::to_string(n));
  double dt = seconds(t0);
  c.equal(dualCycleComplex(24).size(), std::size_t{103681}, "n=24 simplex count");
  c.expect(dt < 10, "n<=24 build time");
  c.notes.push_back("rows 0..11, counts 4..24");
  return c;
}

Check criterion2() {
  Check c;
  for (int n = 4; n <= 30; ++n) {
    c.equal(eulerCharacteristic(dualCycleComplex(n)), std::int64_t{kCycleChi[n % 6]}, "chi(G_" + std::to_string(n) + ")");
    c.equal(eulerCharacteristic(dualPathComplex(n)), std::int64_t{kPathChi[n % 6]}, "chi(G+_" + std::to_string(n) + ")");
  }
  return c;
}

Check criterion3(const json& ref) {
  Check c;
  for (int n = 3; n <= 20; ++n) {
    auto b = bettiVector(cycleFamily(n));
    auto e = ref["betti_cycle"][std::to_string(n)]["betti"].get<Vec>();
    // the n=8 row is printed with a missing last entry
    if (n == 8) c.equal(trimZeros(b), trimZeros(e), "betti G_8");
    else c.equal(b, e, "betti G_" + std::to_string(n) + " got " + join(b));
  }
  for (int n = 4; n <= 21; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    auto k = dualPathComplex(n);
    auto b = bettiVector(k);
    auto e = ref["betti_path"][std::to_string(n)]["betti"].get<Vec>();
    // the n=21 row lists 10 entries for a 10-dimensional complex
    if (n == 21) {
      c.equal(trimZeros(b), trimZeros(e), "betti G+_21");
      std::ostringstream s;
      s << "G+_21: " << k.size() << " simplices in " << seconds(t0) << "s";
      c.notes.push_back(s.str());
    } else {
      c.equal(b, e, "betti G+_" + std::to_string(n) + " got " + join(b));
    }
  }
  return c;
}

Check criterion4(const json& ref) {
  Check c;
  int count = 0;
  for (int n = 4; n <= 10; ++n) {
    auto r = ref["tree_forest"][std::to_string(n)].get<Vec>();
    std::string s = std::to_string(n);
    c.equal(rootedTreeCount(cycleComplement(n)), r[0], "Tree(G_" + s + ")");
    c.equal(rootedForestCount(cycleComplement(n)), r[1], "Forest(G_" + s + ")");
    c.equal(rootedTreeCount(pathComplement(n)), r[2], "Tree(G+_" + s + ")");
    c.equal(rootedForestCount(pathComplement(n)), r[3], "Forest(G+_" + s + ")");
    count += 4;
  }
  c.notes.push_back(std::to_string(count) + " values");
  return c;
}

Check criterion5() {
  Check c;
  double r = dualCycleTreeForestRatio(100);
  c.expect(std::abs(r - std::exp(1.0)) < 0.06, "ratio(G_100) - e");
  auto g = cycleComplement(12);
  double z = zetaForestTreeRatio(nonzeroKirchhoffEigenvalues(g));
  double d = toDouble(treeForestRatio(g));
  c.expect(std::abs(z - d) < 1e-6, "zeta product at n=12");
  std::ostringstream s;
  s.precision(6);
  s << "ratio(G_100)=" << r << ", n=12 zeta " << z << " vs det " << d;
  c.notes.push_back(s.str());
  return c;
}

Check criterion6(const json& ref) {
  Check c;
  auto got = curvatureProfile(pathComplement(12)).values;
  std::vector<Rational> expected;
  for (const auto& s : ref["curvature_path12"]) expected.push_back(parseFraction(s.get<std::string>()));
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  c.equal(got, expected, "G+_12 curvature multiset");
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    auto g = randomGraph(rng, 1, 12);
    c.expect(curvatureProfile(g).total() == eulerCharacteristic(cliqueComplex(g)), "Gauss-Bonnet random " + std::to_string(i));
  }
  std::vector<Graph> fam;
  for (int n = 3; n <= 14; ++n) {
    fam.push_back(cycleComplement(n));
    fam.push_back(pathComplement(n));
  }
  for (int n = 3; n <= 7; ++n) fam.push_back(dihedralCayleyComplement(n));
  fam.push_back(paleyGraph(13));
  fam.push_back(primeGraph(30));
  fam.push_back(complement(circulantGraph(20, {2, 3, 4, 7, 13})));
  fam.push_back(complement(barycentricRefinement(completeGraph(3))));
  for (const auto& g : fam)
    c.expect(curvatureProfile(g).total() == eulerCharacteristic(cliqueComplex(g)), "Gauss-Bonnet family graph");
  for (int n = 5; n <= 14; ++n)
    c.equal(fastPathCurvatures(n), curvatureProfile(pathComplement(n)).values, "fast curvature n=" + std::to_string(n));
  c.notes.push_back("200 random + " + std::to_string(fam.size()) + " family graphs");
  return c;
}

Check criterion7() {
  Check c;
  std::ostringstream s;
  s.precision(4);
  s << "sup deviations:";
  for (int l = 0; l < 6; ++l) {
    double d = renormalizationStability(240, l);
    c.expect(d < 0.05, "stability residue " + std::to_string(l));
    s << " " << d;
  }
  Rational total = 0;
  for (const auto& k : fastPathCurvatures(240)) total += k;
  // f(t) = 1 + f_0 t + f_1 t^2 + ..., so chi = 1 - f(-1)
  Rational chi = 1 - jacobsthalPath(240).evaluate(Rational(-1));
  c.expect(total == chi, "sum K_240 = chi");
  c.notes.push_back(s.str());
  return c;
}

Check criterion8(const json& ref) {
  Check c;
  for (int n = 4; n <= 24; ++n) {
    auto row = dihedralLefschetz(n);
    auto rot = printedRotationColumns(n), refl = printedReflectionColumns(n);
    Vec r(n), f(n);
    for (int j = 0; j < n; ++j) {
      r[j] = row.rotations[rot[j]];
      f[j] = row.reflections[refl[j]];
    }
    const auto& e = ref["lefschetz_cycle"][std::to_string(n)];
    c.equal(r, e["rotations"].get<Vec>(), "rotations n=" + std::to_string(n));
    c.equal(f, e["reflections"].get<Vec>(), "reflections n=" + std::to_string(n));
    bool zero = n == 11 || n == 13 || n == 23;
    c.expect(row.average == (zero ? 0 : 1), "average n=" + std::to_string(n));
  }
  for (int n = 4; n <= 18; ++n) {
    auto k = dualPathComplex(n);
    Vec v;
    for (const auto& a : pathComplementAutomorphisms(n)) v.push_back(lefschetzNumber(k, a.perm));
    c.equal(v, ref["lefschetz_path"][std::to_string(n)]["pair"].get<Vec>(), "G+ pair n=" + std::to_string(n));
  }
  double worst = 0;
  for (int n = 5; n <= 9; ++n) {
    auto k = dualCycleComplex(n);
    for (const auto& a : dihedralAutomorphisms(n)) {
      auto h = lefschetzViaCohomology(k, a.perm);
      worst = std::max(worst, h.residual);
      c.equal(h.value, lefschetzNumber(k, a.perm), "cohomological n=" + std::to_string(n));
    }
  }
  c.expect(worst < 1e-6, "rounding residual");
  std::ostringstream s;
  s << "max residual " << worst;
  c.notes.push_back(s.str());
  return c;
}

Check criterion9(const json& ref) {
  Check c;
  for (int n = 4; n <= 18; ++n) {
    auto k = dualCycleComplex(n);
    auto e = ref["wu"][std::to_string(n)].get<Vec>();
    Vec got{wuCharacteristic(k, 2).convert_to<std::int64_t>(), wuCharacteristic(k, 3).convert_to<std::int64_t>(),
            wuCharacteristic(k, 4).convert_to<std::int64_t>()};
    c.equal(got, Vec(e.begin() + 1, e.end()), "omega n=" + std::to_string(n));
  }
  for (int n = 4; n <= 9; ++n)
    c.equal(fMatrix(dualCycleComplex(n)), ref["f_matrix"][std::to_string(n)].get<I64Matrix>(), "F_" + std::to_string(n));
  int built = 0;
  for (int n = 3; n <= 11; ++n) {
    auto k = cycleFamily(n);
    PairComplex p(k);
    try {
      checkWuDSquaredZero(p);
    } catch (const std::exception&) {
      c.expect(false, "Wu d^2 n=" + std::to_string(n));
    }
    ++built;
    auto b = wuBetti(k);
    auto e = ref["wu_betti"][std::to_string(n)]["betti"].get<Vec>();
    // the n=11 row carries one extra trailing zero
    if (n == 11) c.equal(trimZeros(b), trimZeros(e), "Wu Betti n=11");
    else c.equal(b, e, "Wu Betti n=" + std::to_string(n) + " got " + join(b));
  }
  auto b7 = wuBetti(dualCycleComplex(7));
  c.expect(std::all_of(b7.begin(), b7.end(), [](std::int64_t x) { return x == 0; }), "Wu Betti G_7 zero");
  auto k6 = dualCycleComplex(6);
  Vec w;
  for (const auto& a : dihedralAutomorphisms(6)) w.push_back(wuLefschetz(k6, a.perm));
  auto e = ref["wu_lefschetz_g6"].get<Vec>();
  c.equal(w.front(), e.front(), "Wu Lefschetz identity");
  Vec ws = w, es = e;
  std::sort(ws.begin(), ws.end());
  std::sort(es.begin(), es.end());
  c.equal(ws, es, "Wu Lefschetz G_6 multiset");
  c.notes.push_back("G_6 Wu Lefschetz in frozen order " + join(w) + "; d^2=0 on " + std::to_string(built) + " pair complexes");
  return c;
}

Check criterion10() {
  Check c;
  Vec negatives;
  for (int n = 5; n <= 13; ++n) {
    auto r = connectionReport(dualCycleComplex(n));
    bool claimed = n % 6 == 0 || n % 6 == 1;
    if ((r.det == -1) != claimed) negatives.push_back(n);
    c.equal(r.negative, static_cast<int>(r.oddSimplices), "negatives n=" + std::to_string(n));
    if (n <= 10) {
      auto chi = eulerCharacteristic(dualCycleComplex(n));
      c.equal(r.energySum, chi, "energy n=" + std::to_string(n));
      c.equal(static_cast<std::int64_t>(r.signature), chi, "signature n=" + std::to_string(n));
    }
  }
  if (!negatives.empty()) {
    Vec minus;
    for (int n = 5; n <= 13; ++n)
      if (connectionReport(dualCycleComplex(n)).det == -1) minus.push_back(n);
    c.expect(false, "det sign clause: det = -1 exactly for n in " + join(minus) +
                        " (n = 5,0 mod 6), not for n = 0,1 mod 6; det = (-1)^#odd simplices");
  }
  for (int n = 4; n <= 8; ++n) c.expect(hydrogenCheck(cliqueComplex(cycleGraph(n))), "hydrogen C_" + std::to_string(n));
  double worst = 0;
  for (int n = 6; n <= 10; ++n) {
    auto r = countingReport(dualCycleComplex(n));
    worst = std::max(worst, r.isospectralDeviation);
    c.expect(r.positiveDefinite, "counting positive definite n=" + std::to_string(n));
  }
  c.expect(worst < 1e-7, "counting isospectral");
  c.notes.push_back("energy, signature, negatives, hydrogen and counting clauses evaluated");
  return c;
}

Check criterion11() {
  Check c;
  for (int n = 5; n <= 19; ++n) {
    auto got = classifyHomotopyType(cycleComplement(n));
    auto want = n % 3 == 0 ? wedgeClass((n - 3) / 3, 2) : sphereClass(n % 3 == 2 ? (n - 2) / 3 : (n - 4) / 3);
    c.expect(got == want, "G_" + std::to_string(n) + " is " + got.toString());
  }
  for (int n = 4; n <= 19; ++n) {
    auto got = classifyHomotopyType(pathComplement(n));
    auto want = n % 3 == 1 ? pointClass() : sphereClass((n - 2) / 3);
    c.expect(got == want, "G+_" + std::to_string(n) + " is " + got.toString());
    if (n % 3 == 1)
      c.expect(got.certificate && checkContractionCertificate(pathComplement(n), *got.certificate),
               "certificate G+_" + std::to_string(n));
  }
  int subsets = 0;
  for (int n = 4; n <= 9; ++n) {
    auto g = cycleComplement(n);
    for (int m = 1; m < (1 << n) - 1; ++m) {
      std::vector<int> vs;
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) vs.push_back(i);
      auto t = classifyHomotopyType(inducedSubgraph(g, vs)).tag;
      c.expect(t == HomotopyClass::Tag::Point || t == HomotopyClass::Tag::Sphere, "induced subgraph of G_" + std::to_string(n));
      ++subsets;
    }
  }
  int trees = 0;
  for (int n = 1; n <= 9; ++n)
    for (const auto& t : enumerateTrees(n)) {
      c.expect(forestComplementPrediction(t) == classifyHomotopyType(complement(t)), "tree complement");
      ++trees;
    }
  auto rho = complement(barycentricRefinement(completeGraph(3)));
  auto k = cliqueComplex(rho);
  // the complex is 2-dimensional with b2 = 0
  c.equal(trimZeros(bettiVector(k)), Vec{2, 2}, "barycentric Betti");
  c.equal(fVector(k), Vec{7, 9, 2}, "barycentric f-vector");
  c.notes.push_back(std::to_string(subsets) + " induced subgraphs, " + std::to_string(trees) + " trees");
  return c;
}

Check criterion12() {
  Check c;
  for (int n = 5; n <= 9; ++n) {
    auto k = dualCycleComplex(n);
    for (int m = 1; m <= 3; ++m) c.expect(superTracePower(k, m) == 0, "str(L^" + std::to_string(m) + ") n=" + std::to_string(n));
    double chi = static_cast<double>(eulerCharacteristic(k));
    for (double t : {0.1, 1.0, 10.0}) c.expect(std::abs(superTraceHeat(k, t) - chi) < 1e-6, "heat n=" + std::to_string(n));
  }
  return c;
}

Check criterion13() {
  Check c;
  constexpr int kN = 100;
  std::mt19937_64 rng(977);
  int cases = 0;
  auto flip = [&](std::size_t n) {
    Orientation o(n);
    for (auto& s : o) s = rng() & 1 ? 1 : -1;
    return o;
  };
  for (int i = 0; i < kN; ++i, ++cases) {
    auto g = randomGraph(rng, 1, 11);
    auto k = cliqueComplex(g);
    try {
      checkDSquaredZero(k);
    } catch (const std::exception&) {
      c.expect(false, "d^2 = 0");
    }
    c.expect(isDownwardClosed(k), "downward closure");
    auto b = bettiVector(k);
    std::int64_t alt = 0;
    for (std::size_t d = 0; d < b.size(); ++d) alt += (d % 2 ? -1 : 1) * b[d];
    c.expect(alt == eulerCharacteristic(k), "Euler-Poincare");
    c.expect(curvatureProfile(g).total() == eulerCharacteristic(k), "Gauss-Bonnet");
    std::vector<std::int64_t> f(g.vertexCount());
    for (int v = 0; v < g.vertexCount(); ++v) f[v] = v;
    std::shuffle(f.begin(), f.end(), rng);
    std::int64_t s = 0;
    for (auto x : poincareHopfIndices(g, f)) s += x;
    c.expect(s == eulerCharacteristic(k), "Poincare-Hopf");
    auto o = flip(k.size());
    c.expect(bettiVector(k, &o) == b, "orientation flip Betti");
  }
  for (int i = 0; i < kN; ++i, ++cases) {
    int n = 5 + static_cast<int>(rng() % 6);
    std::vector<int> gens;
    for (int s = 1; s <= n / 2; ++s)
      if (rng() % 2) gens.push_back(s);
    if (gens.empty()) gens.push_back(1);
    auto k = cliqueComplex(circulantGraph(n, gens));
    std::vector<int> perm(n);
    int j = static_cast<int>(rng() % n);
    for (int v = 0; v < n; ++v) perm[v] = (v + j) % n;
    auto o = flip(k.size());
    c.expect(lefschetzViaCohomology(k, perm, &o).value == lefschetzNumber(k, perm), "orientation flip Lefschetz");
  }
  c.notes.push_back(std::to_string(cases) + " randomized instances");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::string data = GCX_TEST_DATA;
  std::vector<int> expectedFail, only;
  app.add_option("--data", data, "directory holding reference_values.json");
  app.add_option("--expected-fail", expectedFail, "criteria known to fail")->delimiter(',');
  app.add_option("--only", only, "run only these criteria")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(data + "/reference_values.json");
  if (!in) {
    std::cerr << "cannot read " << data << "/reference_values.json\n";
    return 2;
  }
  json ref = json::parse(in);

  std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"f-vector table and hyper-Fibonacci counts", [&] { return criterion1(ref); }},
      {"Euler characteristic 6-periodicity", [&] { return criterion2(); }},
      {"Betti tables", [&] { return criterion3(ref); }},
      {"tree/forest table", [&] { return criterion4(ref); }},
      {"forest-tree limit and zeta product", [&] { return criterion5(); }},
      {"curvature", [&] { return criterion6(ref); }},
      {"renormalization", [&] { return criterion7(); }},
      {"Lefschetz", [&] { return criterion8(ref); }},
      {"Wu characteristic", [&] { return criterion9(ref); }},
      {"connection calculus", [&] { return criterion10(); }},
      {"homotopy classification", [&] { return criterion11(); }},
      {"McKean-Singer", [&] { return criterion12(); }},
      {"property suites", [&] { return criterion13(); }},
  };

  std::set<int> xfail(expectedFail.begin(), expectedFail.end());
  int unexpected = 0;
  auto total0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    bool pass = c.failures.empty();
    std::ostringstream line;
    line.precision(3);
    line << (pass ? "PASS" : "FAIL") << "  " << id << "  " << criteria[i].first << "  [" << seconds(t0) << "s]";
    if (!pass) {
      line << "  failed:";
      for (std::size_t j = 0; j < c.failures.size() && j < 5; ++j) line << (j ? "; " : " ") << c.failures[j];
      if (c.failures.size() > 5) line << "; +" << c.failures.size() - 5 << " more";
    }
    for (const auto& n : c.notes) line << "  (" << n << ")";
    if (!pass && xfail.count(id)) line << "  expected failure";
    if (pass && xfail.count(id)) line << "  unexpected pass";
    std::cout << line.str() << std::endl;
    if (pass == static_cast<bool>(xfail.count(id))) ++unexpected;
  }
  std::cout << "total " << seconds(total0) << "s\n";
  return unexpected ? 1 : 0;
}
