#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gcx/graph.hpp"

#ifndef GCX_TEST_DATA
#define GCX_TEST_DATA "tests/data"
#endif

namespace gcx::test {

inline const nlohmann::json& reference() {
  static const nlohmann::json j = [] {
    std::ifstream in(std::string(GCX_TEST_DATA) + "/reference_values.json");
    if (!in) throw std::runtime_error("reference_values.json not found under " GCX_TEST_DATA);
    return nlohmann::json::parse(in);
  }();
  return j;
}

inline std::vector<std::int64_t> trimZeros(std::vector<std::int64_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Erdos-Renyi graph; the generator is seeded by the caller so suites are reproducible.
inline Graph randomGraph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph randomGraph(std::mt19937_64& rng, int minN, int maxN) {
  std::uniform_int_distribution<int> size(minN, maxN);
  std::uniform_real_distribution<double> dens(0.2, 0.8);
  int n = size(rng);
  return randomGraph(rng, n, dens(rng));
}

inline std::vector<std::int64_t> randomInjective(std::mt19937_64& rng, int n) {
  std::vector<std::int64_t> f(n);
  for (int i = 0; i < n; ++i) f[i] = 3 * i - 7;
  std::shuffle(f.begin(), f.end(), rng);
  return f;
}

}  // namespace gcx::test
