#include "premod/intpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace premod {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c(std::move(coeffs)) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPolynomial IntPolynomial::from_rat(const RatPoly& p) {
  Integer l = 1;
  for (const auto& q : p) l = lcm(l, denom(q));
  std::vector<Integer> v;
  v.reserve(p.size());
  for (const auto& q : p) v.push_back(numer(q * l));
  return IntPolynomial(std::move(v)).primitive_part();
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

Integer IntPolynomial::eval_int(const Integer& x) const {
  Integer r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& a : c) g = premod::gcd(g, a);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (lead() < 0) g = -g;
  std::vector<Integer> v;
  v.reserve(c.size());
  for (const auto& a : c) v.push_back(a / g);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c.size() <= 1) return {};
  std::vector<Integer> v(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * static_cast<int>(i);
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Integer& a = c[i];
    if (a == 0) continue;
    if (!out.empty()) out += (a > 0) ? " + " : " - ";
    else if (a < 0) out += "-";
    Integer mag = boost::multiprecision::abs(a);
    bool show_coeff = (mag != 1 || i == 0);
    if (show_coeff) out += mag.str();
    if (i > 0) {
      if (show_coeff) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) v[i] += b.c[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) v[i] -= b.c[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
  return IntPolynomial(std::move(v));
}

RatPoly to_rat(const IntPolynomial& p) {
  RatPoly r;
  r.reserve(p.c.size());
  for (const auto& a : p.c) r.emplace_back(a);
  return r;
}

void rat_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rat_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly v(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
  rat_trim(v);
  return v;
}

std::pair<RatPoly, RatPoly> rat_divmod(const RatPoly& a, const RatPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  RatPoly rem = a, quot;
  rat_trim(rem);
  if (rem.size() >= b.size()) {
    quot.assign(rem.size() - b.size() + 1, Rational(0));
    for (int i = static_cast<int>(rem.size()) - static_cast<int>(b.size()); i >= 0; --i) {
      Rational f = rem[i + b.size() - 1] / b.back();
      quot[i] = f;
      if (f != 0)
        for (size_t j = 0; j < b.size(); ++j) rem[i + j] -= f * b[j];
    }
  }
  rat_trim(rem);
  rat_trim(quot);
  return {quot, rem};
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  rat_trim(a);
  rat_trim(b);
  while (!b.empty()) {
    auto [q, r] = rat_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational l = a.back();
    for (auto& x : a) x /= l;
  }
  return a;
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  if (b.is_zero()) return a.is_zero();
  auto [q, r] = rat_divmod(to_rat(a), to_rat(b));
  return r.empty();
}

IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = rat_divmod(to_rat(a), to_rat(b));
  if (!r.empty()) throw std::domain_error("polynomials do not divide exactly");
  std::vector<Integer> v;
  v.reserve(q.size());
  for (const auto& x : q) {
    if (!is_integral(x)) throw std::domain_error("non-integer quotient coefficient");
    v.push_back(numer(x));
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero() || p.degree() == 0) return p.primitive_part();
  RatPoly g = rat_gcd(to_rat(p), to_rat(p.derivative()));
  if (g.size() <= 1) return p.primitive_part();
  auto [q, r] = rat_divmod(to_rat(p), g);
  (void)r;
  return IntPolynomial::from_rat(q);
}

const IntPolynomial& cyclotomic_polynomial(int n) {
  static std::map<int, IntPolynomial> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  if (n < 1) throw std::domain_error("cyclotomic index must be positive");
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod of Phi_d over proper divisors d of n,
  // filled bottom-up so every divisor is cached first.
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    std::vector<Integer> xd(d + 1, 0);
    xd[0] = -1;
    xd[d] = 1;
    IntPolynomial nd{std::move(xd)};
    for (int e = 1; e < d; ++e)
      if (d % e == 0) nd = exact_div(nd, cache.at(e));
    cache.emplace(d, std::move(nd));
  }
  return cache.at(n);
}

namespace {

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::vector<RatPoly> sturm_chain(const IntPolynomial& p) {
  std::vector<RatPoly> chain;
  RatPoly f0 = to_rat(p);
  rat_trim(f0);
  if (f0.empty()) return chain;
  chain.push_back(f0);
  RatPoly f1 = to_rat(p.derivative());
  rat_trim(f1);
  if (f1.empty()) return chain;
  chain.push_back(f1);
  while (true) {
    auto [q, r] = rat_divmod(chain[chain.size() - 2], chain.back());
    (void)q;
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  int var = 0, prev = 0;
  for (const auto& f : chain) {
    Rational v = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * x + *it;
    int s = sign_of(v);
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

}  // namespace

int sturm_count(const IntPolynomial& p, const Rational& a, const Rational& b) {
  IntPolynomial sf = squarefree_part(p);
  auto chain = sturm_chain(sf);
  if (chain.empty()) return 0;
  return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational cauchy_root_bound(const IntPolynomial& p) {
  if (p.is_zero() || p.degree() == 0) return 1;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational q = Rational(boost::multiprecision::abs(p.c[i])) / boost::multiprecision::abs(p.lead());
    if (q > m) m = q;
  }
  return m + 1;
}

std::optional<std::pair<Rational, Rational>> isolate_largest_real_root(const IntPolynomial& p) {
  IntPolynomial sf = squarefree_part(p);
  if (sf.degree() < 1) return std::nullopt;
  Rational hi = cauchy_root_bound(sf);
  Rational lo = -hi;
  if (sturm_count(sf, lo, hi) == 0) return std::nullopt;
  // shrink from the left until exactly one root remains, then bisect for tightness
  while (sturm_count(sf, lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (sturm_count(sf, mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  for (int i = 0; i < 8; ++i) {
    Rational mid = (lo + hi) / 2;
    if (sturm_count(sf, mid, hi) == 1)
      lo = mid;
    else
      hi = mid;
  }
  return std::make_pair(lo, hi);
}

}  // namespace premod
