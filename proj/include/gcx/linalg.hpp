#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gcx/numeric.hpp"

namespace gcx {

using IntMatrix = std::vector<std::vector<Integer>>;
using I64Matrix = std::vector<std::vector<std::int64_t>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Column-major sparse integer matrix; each column is sorted by row.
struct SparseMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> columns;

  std::size_t cols() const { return columns.size(); }
  IntMatrix toDense() const;
};

// Two fixed primes below 2^31; fixed rather than random so runs are reproducible.
inline constexpr std::uint32_t kRankPrimes[2] = {2147483647u, 2147483629u};

/// Lowest-row column reduction mod p. Columns flagged in `skip` are treated as zero
/// (the clearing shortcut). Returns the pivot row of every column, -1 when the
/// column reduced to zero.
std::vector<std::int32_t> reduceColumnsModP(const SparseMatrix& m, std::uint32_t p,
                                            const std::vector<char>* skip = nullptr);
std::size_t rankModP(const SparseMatrix& m, std::uint32_t p);

std::size_t bareissRank(IntMatrix m);
Integer bareissDeterminant(IntMatrix m);
// Coefficients of det(xI - m), lowest degree first; division free.
std::vector<Integer> charPolyBerkowitz(const IntMatrix& m);
// Exact determinant by elimination modulo many primes and CRT up to the Hadamard bound.
Integer determinantMultimodular(const I64Matrix& m);

IntMatrix toIntMatrix(const I64Matrix& m);
RatMatrix toRatMatrix(const I64Matrix& m);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
// Basis of the right kernel, one vector per free column of the reduced echelon form.
std::vector<std::vector<Rational>> rationalNullspace(RatMatrix m);
// Throws NumericalFailure when singular.
RatMatrix rationalInverse(RatMatrix m);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
// For symmetric integer matrices: characteristic polynomial plus Descartes' rule,
// which is exact because all roots are real.
Inertia exactInertia(const IntMatrix& symmetric);

}  // namespace gcx
