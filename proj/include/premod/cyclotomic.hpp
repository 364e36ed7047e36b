#pragma once

#include <optional>
#include <string>
#include <vector>

#include "premod/intpoly.hpp"
#include "premod/rational.hpp"

namespace premod {

// exp(2*pi*i*k/n) in lowest terms; order of the root is n.
struct RootOfUnity {
  long k = 0;
  long n = 1;

  RootOfUnity() = default;
  RootOfUnity(long kk, long nn);

  long order() const { return n; }
  bool is_one() const { return n == 1; }

  RootOfUnity inverse() const { return {-k, n}; }
  RootOfUnity conjugate() const { return inverse(); }
  RootOfUnity pow(long e) const;

  bool operator==(const RootOfUnity& o) const { return k == o.k && n == o.n; }
  bool operator<(const RootOfUnity& o) const { return n != o.n ? n < o.n : k < o.k; }

  std::string str() const;
};

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);

// Exact element of a cyclotomic field. Coordinates live in the power basis
// {zeta^0, ..., zeta^{phi(n)-1}} modulo Phi_n, and the conductor is kept
// minimal (never congruent to 2 mod 4; 1 for rationals).
class CyclotomicNumber {
 public:
  CyclotomicNumber() : cond_(1), co_{Rational(0)} {}
  CyclotomicNumber(const Rational& r) : cond_(1), co_{r} {}
  CyclotomicNumber(long v) : cond_(1), co_{Rational(v)} {}
  CyclotomicNumber(const Integer& v) : cond_(1), co_{Rational(v)} {}

  static CyclotomicNumber zeta(long n, long k = 1);
  static CyclotomicNumber from_root(const RootOfUnity& r) { return zeta(r.n, r.k); }
  static CyclotomicNumber sqrt_of_integer(const Integer& n);   // n >= 0
  static CyclotomicNumber sqrt_of_rational(const Rational& r); // r >= 0
  static CyclotomicNumber sqrt2();
  static CyclotomicNumber sqrt3();          // conductor 12
  static CyclotomicNumber sqrt5();          // conductor 5
  static CyclotomicNumber golden_ratio();   // (1+sqrt5)/2, conductor 5

  int conductor() const { return cond_; }
  const std::vector<Rational>& coeffs() const { return co_; }

  bool is_zero() const;
  bool is_rational() const { return cond_ == 1; }
  bool is_real() const;
  Rational as_rational() const;  // throws unless rational

  CyclotomicNumber conjugate() const;   // complex conjugation
  CyclotomicNumber galois(long j) const;  // zeta -> zeta^j, gcd(j, conductor) = 1
  CyclotomicNumber inverse() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o);
  CyclotomicNumber operator-() const;

  bool operator==(const CyclotomicNumber& o) const { return cond_ == o.cond_ && co_ == o.co_; }
  bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }
  // lexicographic; gives deterministic orderings, no numeric meaning
  bool operator<(const CyclotomicNumber& o) const;

  // exact sign of a real element; supported for elements of degree <= 2 over Q
  int real_sign() const;
  // largest integer <= value, for real elements of degree <= 2
  Integer real_floor() const;

  std::string str() const;

 private:
  CyclotomicNumber(int cond, std::vector<Rational> co) : cond_(cond), co_(std::move(co)) {}
  static CyclotomicNumber make(int cond, RatPoly p);  // reduces mod Phi, normalizes
  RatPoly lifted_to(int target) const;
  void normalize();

  int cond_;
  std::vector<Rational> co_;
};

CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b);
CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b);
CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b);
CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b);

// Images of a under every automorphism zeta -> zeta^j, gcd(j, conductor)=1;
// the list has phi(conductor) entries counted with multiplicity.
std::vector<CyclotomicNumber> galois_conjugates(const CyclotomicNumber& a);

// Monic over Q, cleared to integer coefficients, content 1, positive lead.
IntPolynomial minimal_polynomial(const CyclotomicNumber& a);

bool is_algebraic_integer(const CyclotomicNumber& a);

// exact solve A x = b over the rationals; nullopt if inconsistent
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> A,
                                                  std::vector<Rational> b);

}  // namespace premod
