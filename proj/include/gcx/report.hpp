#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gcx/complex.hpp"
#include "gcx/graph.hpp"

namespace gcx {

enum class Format { Csv, Json };
Format parseFormat(const std::string& s);

// Rectangular text table. Cells are plain strings; JSON output turns integer and
// decimal cells into numbers, empty cells into null and keeps the rest as strings.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::string csv() const;
  std::string json() const;
  std::string render(Format f) const { return f == Format::Csv ? csv() : json(); }
};

struct FamilySpec {
  std::string family;  // cycle-complement, path-complement, circulant, ...
  int n = 0;
  std::vector<int> gens;
  int q = 0;
};

Graph buildFamily(const FamilySpec& spec);
// Uses the king-configuration recursion for the two complement families.
Complex buildComplex(const FamilySpec& spec, std::size_t simplexCap = kDefaultSimplexCap);

// 0 means hardware concurrency. Output never depends on it.
void setThreadCount(int threads);
int threadCount();

std::vector<std::string> tableNames();
// maxN < 0 selects the table's default range.
Table namedTable(const std::string& name, int maxN = -1, bool printedOrder = false);

Table fvectorTable(int maxN = 11);
Table dimsTable(bool path, int maxN = 14);
Table bettiTable(bool path, int maxN);
Table wuTable(int maxN = 18);
Table wuBettiTable(int maxN = 11);
Table treeForestTable(int maxN = 10);
Table lefschetzCycleTable(int maxN = 24, bool printedOrder = false);
Table lefschetzPathTable(int maxN = 18);
Table dihedralBettiTable(int maxN = 12);

// Single-graph commands.
std::string familyReport(const FamilySpec& spec, Format f);
std::string fvectorReport(const FamilySpec& spec, Format f, std::size_t cap);
std::string bettiReport(const FamilySpec& spec, Format f, std::size_t cap);
std::string curvatureReport(const FamilySpec& spec, Format f);
std::string renormReport(int n, Format f);
std::string lefschetzReport(const FamilySpec& spec, Format f, bool printedOrder);
std::string wuReport(const FamilySpec& spec, Format f, std::size_t cap);
std::string treesReport(const FamilySpec& spec, Format f);
std::string zetaReport(const FamilySpec& spec, Format f);
std::string spectrumReport(const FamilySpec& spec, Format f, std::size_t cap);
std::string classifyReport(const FamilySpec& spec, Format f);

std::string formatDouble(double x);

}  // namespace gcx
