#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gcx/gcx.h"

namespace {

const char* kCommands =
    "commands: family fvector betti curvature renorm lefschetz wu trees zeta spectrum classify table <name>";

int exitCode(gcx_status s) {
  switch (s) {
    case GCX_OK: return 0;
    case GCX_ERR_INVALID: return 2;
    case GCX_ERR_BOUND: return 3;
    case GCX_ERR_NUMERICAL: return 4;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique complexes of graph complements and their invariants"};
  app.footer(kCommands);

  std::string command, name, family, format = "csv", out;
  int n = 0, q = 0, maxN = -1, threads = 0;
  std::vector<int> gens;
  std::size_t simplexCap = 0;
  bool printedOrder = false;

  app.add_option("command", command, "command to run")->required();
  app.add_option("name", name, "table name for the table command");
  app.add_option("--family", family, "graph family")
      ->check(CLI::IsMember({"cycle-complement", "path-complement", "circulant", "dihedral-complement", "paley",
                             "prime", "barycentric-complement"}));
  app.add_option("--n", n, "family size parameter");
  app.add_option("--gens", gens, "circulant generators, comma separated")->delimiter(',');
  app.add_option("--q", q, "Paley prime");
  app.add_option("--max-n", maxN, "largest n in a table");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out, "write output to this file");
  app.add_option("--simplex-cap", simplexCap, "maximum number of simplices")->check(CLI::PositiveNumber);
  app.add_flag("--paper-order", printedOrder, "print Lefschetz columns in the published layout");
  app.add_option("--threads", threads, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (command == "table" && name.empty()) {
    char* names = nullptr;
    gcx_table_names(&names);
    std::cerr << "table needs a name, one of:\n" << names;
    gcx_string_free(names);
    return 2;
  }

  gcx_request req;
  gcx_request_init(&req);
  req.command = command.c_str();
  req.table = name.empty() ? nullptr : name.c_str();
  req.family = family.empty() ? nullptr : family.c_str();
  req.n = n;
  req.gens = gens.empty() ? nullptr : gens.data();
  req.ngens = gens.size();
  req.q = q;
  req.max_n = maxN;
  req.format = format == "json" ? GCX_FORMAT_JSON : GCX_FORMAT_CSV;
  req.simplex_cap = simplexCap;
  req.printed_order = printedOrder ? 1 : 0;
  req.threads = threads;

  char* text = nullptr;
  gcx_status st = gcx_run(&req, &text);
  if (st != GCX_OK) {
    std::cerr << "error: " << gcx_last_error() << "\n";
    if (st == GCX_ERR_INVALID) std::cerr << app.help();
    return exitCode(st);
  }
  if (out.empty()) {
    std::fwrite(text, 1, std::char_traits<char>::length(text), stdout);
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << out << "\n";
      gcx_string_free(text);
      return 2;
    }
    f << text;
  }
  gcx_string_free(text);
  return 0;
}
