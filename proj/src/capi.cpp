#include "gcx/gcx.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"

#include "gcx/complex.hpp"
#include "gcx/curvature.hpp"
#include "gcx/errors.hpp"
#include "gcx/hodge.hpp"
#include "gcx/homotopy.hpp"
#include "gcx/kirchhoff.hpp"
#include "gcx/report.hpp"
#include "gcx/wu.hpp"

struct gcx_graph {
  gcx::Graph g;
};

struct gcx_complex {
  gcx::Complex k;
};

namespace {

thread_local std::string lastError;

template <class F>
gcx_status guarded(F&& f) {
  lastError.clear();
  try {
    f();
    return GCX_OK;
  } catch (const gcx::InvalidArgument& e) {
    lastError = e.what();
    return GCX_ERR_INVALID;
  } catch (const gcx::BoundExceeded& e) {
    lastError = e.what();
    return GCX_ERR_BOUND;
  } catch (const gcx::NumericalFailure& e) {
    lastError = e.what();
    return GCX_ERR_NUMERICAL;
  } catch (const std::bad_alloc&) {
    lastError = "out of memory";
    return GCX_ERR_BOUND;
  } catch (const std::exception& e) {
    lastError = e.what();
    return GCX_ERR_INTERNAL;
  } catch (...) {
    lastError = "unknown error";
    return GCX_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw gcx::InvalidArgument(std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class V>
void copyOut(const V& v, int64_t* buf, size_t cap, size_t* len) {
  need(len, "len");
  *len = v.size();
  if (!buf) return;
  for (size_t i = 0; i < v.size() && i < cap; ++i) buf[i] = static_cast<int64_t>(v[i]);
}

}  // namespace

extern "C" {

const char* gcx_last_error(void) { return lastError.c_str(); }

const char* gcx_version(void) { return "1.0.0"; }

void gcx_string_free(char* s) { std::free(s); }

gcx_status gcx_graph_family(const char* family, int n, const int* gens, size_t ngens, int q, gcx_graph** out) {
  return guarded([&] {
    need(family, "family");
    need(out, "out");
    gcx::FamilySpec s{family, n, {}, q};
    if (ngens) {
      need(gens, "gens");
      s.gens.assign(gens, gens + ngens);
    }
    *out = new gcx_graph{gcx::buildFamily(s)};
  });
}

gcx_status gcx_graph_from_edges(int n, const int* edges, size_t nedges, gcx_graph** out) {
  return guarded([&] {
    need(out, "out");
    if (n < 0) throw gcx::InvalidArgument("vertex count must be >= 0");
    std::vector<std::pair<int, int>> e;
    if (nedges) need(edges, "edges");
    for (size_t i = 0; i < nedges; ++i) e.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new gcx_graph{gcx::Graph(n, e)};
  });
}

gcx_status gcx_graph_from_json(const char* text, gcx_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new gcx_graph{gcx::graphFromJson(text)};
  });
}

gcx_status gcx_graph_to_json(const gcx_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(gcx::graphToJson(g->g));
  });
}

gcx_status gcx_graph_complement(const gcx_graph* g, gcx_graph** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new gcx_graph{gcx::complement(g->g)};
  });
}

int gcx_graph_vertex_count(const gcx_graph* g) { return g ? g->g.vertexCount() : -1; }

size_t gcx_graph_edge_count(const gcx_graph* g) { return g ? g->g.edgeCount() : 0; }

void gcx_graph_free(gcx_graph* g) { delete g; }

gcx_status gcx_complex_from_graph(const gcx_graph* g, size_t cap, gcx_complex** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new gcx_complex{gcx::cliqueComplex(g->g, cap ? cap : gcx::kDefaultSimplexCap)};
  });
}

gcx_status gcx_complex_dual_cycle(int n, gcx_complex** out) {
  return guarded([&] {
    need(out, "out");
    *out = new gcx_complex{gcx::dualCycleComplex(n)};
  });
}

gcx_status gcx_complex_dual_path(int n, gcx_complex** out) {
  return guarded([&] {
    need(out, "out");
    *out = new gcx_complex{gcx::dualPathComplex(n)};
  });
}

size_t gcx_complex_size(const gcx_complex* k) { return k ? k->k.size() : 0; }

int gcx_complex_dimension(const gcx_complex* k) { return k ? k->k.dimension() : -1; }

void gcx_complex_free(gcx_complex* k) { delete k; }

gcx_status gcx_complex_fvector(const gcx_complex* k, int64_t* buf, size_t cap, size_t* len) {
  return guarded([&] {
    need(k, "complex");
    copyOut(gcx::fVector(k->k), buf, cap, len);
  });
}

gcx_status gcx_complex_betti(const gcx_complex* k, int64_t* buf, size_t cap, size_t* len) {
  return guarded([&] {
    need(k, "complex");
    copyOut(gcx::bettiVector(k->k), buf, cap, len);
  });
}

gcx_status gcx_complex_euler(const gcx_complex* k, int64_t* chi) {
  return guarded([&] {
    need(k, "complex");
    need(chi, "chi");
    *chi = gcx::eulerCharacteristic(k->k);
  });
}

gcx_status gcx_complex_wu(const gcx_complex* k, int order, char** out) {
  return guarded([&] {
    need(k, "complex");
    need(out, "out");
    *out = dup(gcx::wuCharacteristic(k->k, order).str());
  });
}

gcx_status gcx_complex_wu_betti(const gcx_complex* k, int64_t* buf, size_t cap, size_t* len) {
  return guarded([&] {
    need(k, "complex");
    copyOut(gcx::wuBetti(k->k), buf, cap, len);
  });
}

gcx_status gcx_graph_curvature(const gcx_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : gcx::curvatureProfile(g->g).values) a.push_back(gcx::toFractionString(r));
    *out = dup(a.dump());
  });
}

gcx_status gcx_graph_rooted_trees(const gcx_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(gcx::rootedTreeCount(g->g).str());
  });
}

gcx_status gcx_graph_rooted_forests(const gcx_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(gcx::rootedForestCount(g->g).str());
  });
}

gcx_status gcx_graph_classify(const gcx_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    auto c = gcx::classifyHomotopyType(g->g);
    nlohmann::ordered_json o;
    o["class"] = c.toString();
    o["betti"] = c.betti;
    if (c.certificate) {
      o["certificate"]["removal_sequence"] = c.certificate->sequence;
      o["certificate"]["survivor"] = c.certificate->survivor;
    }
    *out = dup(o.dump());
  });
}

void gcx_request_init(gcx_request* r) {
  if (!r) return;
  *r = gcx_request{};
  r->max_n = -1;
  r->format = GCX_FORMAT_CSV;
}

gcx_status gcx_run(const gcx_request* r, char** out) {
  return guarded([&] {
    need(r, "request");
    need(r->command, "command");
    need(out, "out");
    std::string cmd = r->command;
    gcx::FamilySpec s{r->family ? r->family : "", r->n, {}, r->q};
    if (r->ngens) {
      need(r->gens, "gens");
      s.gens.assign(r->gens, r->gens + r->ngens);
    }
    auto f = r->format == GCX_FORMAT_JSON ? gcx::Format::Json : gcx::Format::Csv;
    std::size_t cap = r->simplex_cap ? r->simplex_cap : gcx::kDefaultSimplexCap;
    bool printed = r->printed_order != 0;
    gcx::setThreadCount(r->threads);
    static const std::vector<std::string> known{"family", "fvector", "betti", "curvature", "renorm", "lefschetz",
                                                "wu",     "trees",   "zeta",  "spectrum",  "classify", "table"};
    if (std::find(known.begin(), known.end(), cmd) == known.end()) throw gcx::InvalidArgument("unknown command: " + cmd);
    if (cmd != "table" && cmd != "renorm" && s.family.empty()) throw gcx::InvalidArgument(cmd + " needs --family");
    std::string text;
    if (cmd == "table") {
      need(r->table, "table");
      text = gcx::namedTable(r->table, r->max_n, printed).render(f);
    } else if (cmd == "family") text = gcx::familyReport(s, f);
    else if (cmd == "fvector") text = gcx::fvectorReport(s, f, cap);
    else if (cmd == "betti") text = gcx::bettiReport(s, f, cap);
    else if (cmd == "curvature") text = gcx::curvatureReport(s, f);
    else if (cmd == "renorm") text = gcx::renormReport(r->n, f);
    else if (cmd == "lefschetz") text = gcx::lefschetzReport(s, f, printed);
    else if (cmd == "wu") text = gcx::wuReport(s, f, cap);
    else if (cmd == "trees") text = gcx::treesReport(s, f);
    else if (cmd == "zeta") text = gcx::zetaReport(s, f);
    else if (cmd == "spectrum") text = gcx::spectrumReport(s, f, cap);
    else text = gcx::classifyReport(s, f);
    *out = dup(text);
  });
}

gcx_status gcx_table_names(char** out) {
  return guarded([&] {
    need(out, "out");
    std::string s;
    for (const auto& n : gcx::tableNames()) s += n + "\n";
    *out = dup(s);
  });
}

}  // extern "C"
