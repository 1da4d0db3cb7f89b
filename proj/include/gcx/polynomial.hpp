#pragma once

#include <string>
#include <vector>

#include "gcx/complex.hpp"
#include "gcx/numeric.hpp"

namespace gcx {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs()[i] multiplies t^i; trailing zeros are always trimmed.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(std::vector<Rational> coeffs);  // NOLINT: implicit by design
  static RationalPoly constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }
  static RationalPoly monomial(const Rational& c, int power);

  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coefficient(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }

  Rational evaluate(const Rational& t) const;
  RationalPoly derivative() const;
  // Antiderivative with zero constant term.
  RationalPoly antiderivative() const;
  Rational integrate(const Rational& a, const Rational& b) const;

  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly operator*(const Rational& s) const;
  RationalPoly& operator+=(const RationalPoly& o) { return *this = *this + o; }
  bool operator==(const RationalPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RationalPoly& o) const { return !(*this == o); }

  std::string toJson() const;
  std::string toString() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// f(t) = 1 + sum_k f_k t^(k+1).
RationalPoly generatingFunction(const Complex& k);
RationalPoly generatingFunction(const std::vector<std::int64_t>& f);

// f_n = f_{n-1} + t f_{n-2}, seeds (2, 1).
RationalPoly jacobsthalCycle(int n);
// Same recursion, seeds f_{-1} = f_0 = 1.
RationalPoly jacobsthalPath(int n);
// ((1+u)^n + (1-u)^n) / 2^n with u^2 = 4t+1, expanded by binomial sums; n >= 1.
RationalPoly jacobsthalCycleClosedForm(int n);

}  // namespace gcx
