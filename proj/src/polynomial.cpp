#include "gcx/polynomial.hpp"

#include <map>

#include "json.hpp"

#include "gcx/errors.hpp"

namespace gcx {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::monomial(const Rational& c, int power) {
  if (power < 0) throw InvalidArgument("negative power");
  std::vector<Rational> v(power + 1, Rational(0));
  v[power] = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::antiderivative() const {
  std::vector<Rational> a{Rational(0)};
  for (std::size_t i = 0; i < c_.size(); ++i) a.push_back(c_[i] / static_cast<long>(i + 1));
  return RationalPoly(std::move(a));
}

Rational RationalPoly::integrate(const Rational& a, const Rational& b) const {
  auto F = antiderivative();
  return F.evaluate(b) - F.evaluate(a);
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const { return *this + o * Rational(-1); }

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (isZero() || o.isZero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator*(const Rational& s) const {
  std::vector<Rational> r(c_);
  for (auto& x : r) x *= s;
  return RationalPoly(std::move(r));
}

std::string RationalPoly::toJson() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : c_) j.push_back(toFractionString(x));
  return j.dump();
}

std::string RationalPoly::toString() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].str() + ")";
    if (i == 1) s += "t";
    if (i > 1) s += "t^" + std::to_string(i);
  }
  return s;
}

RationalPoly generatingFunction(const std::vector<std::int64_t>& f) {
  std::vector<Rational> c{Rational(1)};
  for (auto x : f) c.emplace_back(x);
  return RationalPoly(std::move(c));
}

RationalPoly generatingFunction(const Complex& k) { return generatingFunction(fVector(k)); }

namespace {

RationalPoly jacobsthal(int n, RationalPoly a, RationalPoly b, int firstIndex) {
  // a = f_{firstIndex}, b = f_{firstIndex+1}
  if (n == firstIndex) return a;
  RationalPoly t = RationalPoly::monomial(1, 1);
  for (int m = firstIndex + 2; m <= n; ++m) {
    RationalPoly c = b + t * a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

}  // namespace

RationalPoly jacobsthalCycle(int n) {
  if (n < 0) throw InvalidArgument("cycle Jacobsthal polynomial needs n >= 0");
  return jacobsthal(n, RationalPoly::constant(2), RationalPoly::constant(1), 0);
}

RationalPoly jacobsthalPath(int n) {
  if (n < -1) throw InvalidArgument("path Jacobsthal polynomial needs n >= -1");
  return jacobsthal(n, RationalPoly::constant(1), RationalPoly::constant(1), -1);
}

// With the cycle seeds both characteristic roots (1 +- u)/2 carry weight 1, so
// f_n = ((1+u)^n + (1-u)^n) / 2^n. Odd powers of u cancel and u^(2m) = (4t+1)^m.
RationalPoly jacobsthalCycleClosedForm(int n) {
  if (n < 1) throw InvalidArgument("closed form needs n >= 1");
  RationalPoly sum;
  RationalPoly fourTPlusOne(std::vector<Rational>{Rational(1), Rational(4)});
  RationalPoly power = RationalPoly::constant(1);
  Integer binom = 1;  // C(n, 2m)
  for (int m = 0; 2 * m <= n; ++m) {
    if (m > 0) {
      binom = binom * (n - 2 * m + 2) * (n - 2 * m + 1) / ((2 * m - 1) * (2 * m));
      power = power * fourTPlusOne;
    }
    sum += power * Rational(2 * binom);
  }
  Integer twoN = Integer(1) << n;
  return sum * Rational(Integer(1), twoN);
}

}  // namespace gcx
