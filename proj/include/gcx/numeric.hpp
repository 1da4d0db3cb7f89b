#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace gcx {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// "p/q" with q > 0; integers are written as "p/1" so the format is uniform.
std::string toFractionString(const Rational& r);
Rational parseFraction(const std::string& s);

double toDouble(const Rational& r);

}  // namespace gcx
