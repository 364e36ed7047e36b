#pragma once

#include <optional>
#include <string>
#include <vector>

#include "premod/rational.hpp"

namespace premod {

using RatPoly = std::vector<Rational>;  // ascending coefficients, trimmed

// Integer polynomial, ascending coefficients, no leading zeros.
// Zero polynomial is the empty vector.
struct IntPolynomial {
  std::vector<Integer> c;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial from_rat(const RatPoly& p);  // clears denominators, primitive, lead > 0

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Integer& lead() const { return c.back(); }

  Rational eval(const Rational& x) const;
  Integer eval_int(const Integer& x) const;

  Integer content() const;
  IntPolynomial primitive_part() const;  // content 1, positive leading coefficient
  IntPolynomial derivative() const;

  bool operator==(const IntPolynomial& o) const { return c == o.c; }

  std::string str(const std::string& var = "t") const;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

RatPoly to_rat(const IntPolynomial& p);
void rat_trim(RatPoly& p);
RatPoly rat_mul(const RatPoly& a, const RatPoly& b);
// divides a by b; returns {quotient, remainder}
std::pair<RatPoly, RatPoly> rat_divmod(const RatPoly& a, const RatPoly& b);
RatPoly rat_gcd(RatPoly a, RatPoly b);  // monic gcd

// true iff b divides a exactly (over the rationals)
bool divides(const IntPolynomial& b, const IntPolynomial& a);

// exact quotient, throws if not divisible
IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial squarefree_part(const IntPolynomial& p);

// n-th cyclotomic polynomial, cached
const IntPolynomial& cyclotomic_polynomial(int n);

// number of distinct real roots of p in (a, b]
int sturm_count(const IntPolynomial& p, const Rational& a, const Rational& b);

// all real roots lie in [-bound, bound]
Rational cauchy_root_bound(const IntPolynomial& p);

// isolating interval (lo, hi] for the largest real root, or nullopt if none
std::optional<std::pair<Rational, Rational>> isolate_largest_real_root(const IntPolynomial& p);

}  // namespace premod
