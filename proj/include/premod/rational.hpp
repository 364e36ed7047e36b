#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace premod {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps the canonical form we need:
// gcd(num, den) = 1 and den > 0, maintained on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denom(q) == 1; }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

// "p/q" or "p"; used by the JSON coefficient encoding.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("nonpositive denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numer(q).str();
  return numer(q).str() + "/" + denom(q).str();
}

}  // namespace premod
