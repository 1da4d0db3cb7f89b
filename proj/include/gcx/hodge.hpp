#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcx/complex.hpp"
#include "gcx/linalg.hpp"

namespace gcx {

constexpr std::size_t kDefaultDenseCap = 4000;

// Optional per-simplex orientation signs (+1/-1, indexed canonically). A flip is a
// change of basis and must leave Betti and Lefschetz numbers alone.
using Orientation = std::vector<std::int8_t>;

/// Boundary block: columns are the dim-simplices, rows the (dim-1)-simplices,
/// both indexed locally within their dimension block. Removing the vertex at
/// 0-based position i of the sorted column simplex carries the sign (-1)^i.
/// This is the transpose of the exterior derivative d_{dim-1}.
SparseMatrix boundaryBlock(const Complex& k, int dim, const Orientation* orientation = nullptr);

/// Full exterior derivative on all simplices: column b, row a, nonzero only when
/// b is a facet of a. Global canonical indices.
SparseMatrix exteriorDerivative(const Complex& k, const Orientation* orientation = nullptr);

// Throws InternalError if d∘d != 0 in integer arithmetic.
void checkDSquaredZero(const Complex& k, const Orientation* orientation = nullptr);

/// Hodge blocks L_k = d_k^T d_k + d_{k-1} d_{k-1}^T. Throws BoundExceeded when a block
/// is larger than the dense cap.
std::vector<I64Matrix> hodgeBlocks(const Complex& k, std::size_t denseCap = kDefaultDenseCap);

struct RankReport {
  std::vector<std::size_t> ranks;  // ranks[d] = rank of boundaryBlock(d), ranks[0] = 0
  bool arbitrated = false;          // true when the two primes disagreed somewhere
};

RankReport boundaryRanks(const Complex& k, const Orientation* orientation = nullptr,
                         std::size_t denseCap = kDefaultDenseCap);
std::vector<std::int64_t> bettiVector(const Complex& k, const Orientation* orientation = nullptr);
// b_k from nullities of the float Hodge blocks; cross-check only.
std::vector<std::int64_t> bettiFromSpectrum(const Complex& k, std::size_t denseCap = kDefaultDenseCap);

// Exact rational basis of ker L_dim; columns given as vectors over the dim block.
std::vector<std::vector<Rational>> harmonicBasis(const Complex& k, int dim);

// Eigenvalues per block, ascending.
std::vector<std::vector<double>> hodgeBlockSpectra(const Complex& k, std::size_t denseCap = kDefaultDenseCap);
std::vector<double> hodgeSpectrum(const Complex& k, std::size_t denseCap = kDefaultDenseCap);
double zeroEigenvalueTolerance(const I64Matrix& block);

// sum_k (-1)^k tr(L_k^m), exact.
Integer superTracePower(const Complex& k, int m, std::size_t denseCap = kDefaultDenseCap);
// sum_k (-1)^k tr(exp(-t L_k)).
double superTraceHeat(const Complex& k, double t, std::size_t denseCap = kDefaultDenseCap);

// "row col value" per line, 0-indexed.
std::string coordinateText(const SparseMatrix& m);
std::string coordinateText(const I64Matrix& m);

}  // namespace gcx
