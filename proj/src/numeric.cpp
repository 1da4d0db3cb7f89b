#include "gcx/numeric.hpp"

#include "gcx/errors.hpp"

namespace gcx {

std::string toFractionString(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parseFraction(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) throw InvalidArgument("zero denominator in '" + s + "'");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw InvalidArgument("not a fraction: '" + s + "'");
  }
}

double toDouble(const Rational& r) { return r.convert_to<double>(); }

}  // namespace gcx
