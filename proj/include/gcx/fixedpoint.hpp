#pragma once

#include <string>
#include <vector>

#include "gcx/complex.hpp"
#include "gcx/hodge.hpp"

namespace gcx {

struct Automorphism {
  std::vector<int> perm;  // vertex v goes to perm[v]
  std::string kind;       // "rot", "refl", "id", "rev" or "user"
  int j = 0;
};

// Throws InvalidArgument unless perm is a permutation preserving adjacency.
void verifyAutomorphism(const Graph& g, const std::vector<int>& perm);

// Rotations x -> x+j (j = 0..n-1), then reflections x -> j-x (j = 0..n-1), each verified on G_n.
std::vector<Automorphism> dihedralAutomorphisms(int n);
// {identity, reversal} of G_n^+.
std::vector<Automorphism> pathComplementAutomorphisms(int n);

// Printed layout: rotation column k (1..n) is x -> x-k, i.e. internal rotation (n-k) mod n,
// so the identity comes last; reflection column k is x -> (n-1-k)-x.
std::vector<int> printedRotationColumns(int n);
std::vector<int> printedReflectionColumns(int n);

// Image of a simplex, sorted, plus the parity of the sorting permutation.
std::pair<Simplex, int> applyToSimplex(const std::vector<int>& perm, const Simplex& x);

std::vector<Simplex> fixedSimplices(const Complex& k, const std::vector<int>& perm);
// sum over fixed simplices of (-1)^dim x sign(T|x).
std::int64_t lefschetzNumber(const Complex& k, const std::vector<int>& perm);

struct CohomologicalLefschetz {
  double raw = 0;
  std::int64_t value = 0;
  double residual = 0;
};
// Super trace of T on harmonic forms; NumericalFailure when the residual exceeds 1e-6.
CohomologicalLefschetz lefschetzViaCohomology(const Complex& k, const std::vector<int>& perm,
                                              const Orientation* orientation = nullptr,
                                              std::size_t denseCap = kDefaultDenseCap);

// Signed permutation action on k-forms: column x has sign at row T(x).
SparseMatrix formAction(const Complex& k, int dim, const std::vector<int>& perm,
                        const Orientation* orientation = nullptr);

struct LefschetzRow {
  int n = 0;
  std::vector<std::int64_t> rotations;    // internal order
  std::vector<std::int64_t> reflections;  // internal order
  Rational average;
};
LefschetzRow dihedralLefschetz(int n);
Rational averageLefschetz(int n);

}  // namespace gcx
