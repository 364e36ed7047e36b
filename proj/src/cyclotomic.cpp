#include "premod/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "premod/arith.hpp"

namespace premod {

namespace {

long mod_pos(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

// reduce p mod Phi_n, pad to phi(n) coordinates
std::vector<Rational> reduce_mod_phi(RatPoly p, int n) {
  const IntPolynomial& phi = cyclotomic_polynomial(n);
  auto [q, r] = rat_divmod(p, to_rat(phi));
  (void)q;
  r.resize(euler_phi(n), Rational(0));
  return r;
}

}  // namespace

RootOfUnity::RootOfUnity(long kk, long nn) {
  if (nn <= 0) throw std::domain_error("root of unity needs positive order");
  long g = std::gcd(mod_pos(kk, nn), nn);
  if (g == 0) g = nn;  // k == 0
  n = nn / g;
  k = mod_pos(kk, nn) / g;
  if (n == 1) k = 0;
}

RootOfUnity RootOfUnity::pow(long e) const {
  // take e mod n first so k*e cannot overflow for the small orders in scope
  return RootOfUnity(k * mod_pos(e, n), n);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  long m = std::lcm(a.n, b.n);
  return RootOfUnity(a.k * (m / a.n) + b.k * (m / b.n), m);
}

std::string RootOfUnity::str() const {
  if (n == 1) return "1";
  if (n == 2) return "-1";
  return "zeta" + std::to_string(n) + (k == 1 ? "" : "^" + std::to_string(k));
}

CyclotomicNumber CyclotomicNumber::make(int cond, RatPoly p) {
  CyclotomicNumber x(cond, reduce_mod_phi(std::move(p), cond));
  x.normalize();
  return x;
}

CyclotomicNumber CyclotomicNumber::zeta(long n, long k) {
  RootOfUnity r(k, n);  // lowest terms
  long nn = r.n, kk = r.k;
  if (nn == 1) return CyclotomicNumber(Rational(1));
  if (nn == 2) return CyclotomicNumber(Rational(-1));
  if (nn % 4 == 2) {
    // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
    long m = nn / 2;
    CyclotomicNumber z = zeta(m, (kk * ((m + 1) / 2)) % m);
    return (kk % 2 == 1) ? -z : z;
  }
  RatPoly p(static_cast<size_t>(kk) + 1, Rational(0));
  p[kk] = 1;
  return make(static_cast<int>(nn), std::move(p));
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(co_.begin(), co_.end(), [](const Rational& q) { return q == 0; });
}

bool CyclotomicNumber::is_real() const { return conjugate() == *this; }

Rational CyclotomicNumber::as_rational() const {
  if (cond_ != 1) throw std::domain_error("not a rational number: " + str());
  return co_[0];
}

RatPoly CyclotomicNumber::lifted_to(int target) const {
  if (target % cond_ != 0) throw std::logic_error("bad conductor lift");
  long step = target / cond_;
  RatPoly p;
  for (size_t i = 0; i < co_.size(); ++i) {
    if (co_[i] == 0) continue;
    size_t e = i * step;
    if (p.size() <= e) p.resize(e + 1, Rational(0));
    p[e] = co_[i];
  }
  return p;
}

namespace {

// cached subfield basis: columns are zeta_cond^{(cond/m) j} in the power basis
const std::vector<std::vector<Rational>>& subfield_basis(int cond, int m) {
  static std::map<std::pair<int, int>, std::vector<std::vector<Rational>>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(cond, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  int dim = euler_phi(cond), sub = euler_phi(m);
  std::vector<std::vector<Rational>> A(dim, std::vector<Rational>(sub, Rational(0)));
  for (int j = 0; j < sub; ++j) {
    RatPoly p(static_cast<size_t>(j) * (cond / m) + 1, Rational(0));
    p.back() = 1;
    auto col = reduce_mod_phi(std::move(p), cond);
    for (int i = 0; i < dim; ++i) A[i][j] = col[i];
  }
  return cache.emplace(key, std::move(A)).first->second;
}

}  // namespace

void CyclotomicNumber::normalize() {
  if (cond_ == 1) return;
  // rational fast path
  bool rational = true;
  for (size_t i = 1; i < co_.size(); ++i)
    if (co_[i] != 0) {
      rational = false;
      break;
    }
  if (rational) {
    co_.resize(1);
    cond_ = 1;
    return;
  }
  // try proper divisors of the conductor, smallest field first
  std::vector<int> divs;
  for (int m = 1; m < cond_; ++m)
    if (cond_ % m == 0 && m % 4 != 2) divs.push_back(m);
  std::sort(divs.begin(), divs.end(), [](int a, int b) {
    int pa = euler_phi(a), pb = euler_phi(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (int m : divs) {
    // necessary first: fixed by the Galois subgroup of Q(zeta_cond)/Q(zeta_m)
    bool fixed = true;
    for (long j = 1; j < cond_ && fixed; j += m) {
      if (j == 1 || std::gcd(j, static_cast<long>(cond_)) != 1) continue;
      // sigma_j permutes basis exponents; compare without constructing objects
      RatPoly p;
      for (size_t i = 0; i < co_.size(); ++i) {
        if (co_[i] == 0) continue;
        size_t e = (i * j) % cond_;
        if (p.size() <= e) p.resize(e + 1, Rational(0));
        p[e] += co_[i];
      }
      auto reduced = reduce_mod_phi(std::move(p), cond_);
      for (size_t i = 0; i < co_.size() && fixed; ++i)
        if (reduced[i] != co_[i]) fixed = false;
    }
    if (!fixed) continue;
    std::vector<Rational> b(co_.begin(), co_.end());
    b.resize(euler_phi(cond_), Rational(0));
    if (auto c = solve_linear(subfield_basis(cond_, m), std::move(b))) {
      cond_ = m;
      co_ = std::move(*c);
      co_.resize(euler_phi(m), Rational(0));
      return;  // divisors of m were already tested (divisor of cond too, smaller phi)
    }
  }
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  int target = static_cast<int>(std::lcm(cond_, o.cond_));
  RatPoly a = lifted_to(target), b = o.lifted_to(target);
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  *this = make(target, std::move(a));
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  return *this += -o;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  int target = static_cast<int>(std::lcm(cond_, o.cond_));
  RatPoly a = lifted_to(target), b = o.lifted_to(target);
  *this = make(target, rat_mul(a, b));
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) {
  return *this *= o.inverse();
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& q : r.co_) q = -q;
  return r;
}

bool CyclotomicNumber::operator<(const CyclotomicNumber& o) const {
  if (cond_ != o.cond_) return cond_ < o.cond_;
  for (size_t i = 0; i < co_.size() && i < o.co_.size(); ++i)
    if (co_[i] != o.co_[i]) return co_[i] < o.co_[i];
  return false;
}

CyclotomicNumber CyclotomicNumber::conjugate() const { return galois(-1); }

CyclotomicNumber CyclotomicNumber::galois(long j) const {
  if (cond_ == 1) return *this;
  long jj = mod_pos(j, cond_);
  if (std::gcd(jj, static_cast<long>(cond_)) != 1)
    throw std::domain_error("galois exponent not coprime to conductor");
  RatPoly p;
  for (size_t i = 0; i < co_.size(); ++i) {
    if (co_[i] == 0) continue;
    size_t e = (i * jj) % cond_;
    if (p.size() <= e) p.resize(e + 1, Rational(0));
    p[e] += co_[i];
  }
  return make(cond_, std::move(p));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (cond_ == 1) return CyclotomicNumber(Rational(1) / co_[0]);
  // extended euclid in Q[x] against Phi_n (irreducible, so gcd is constant)
  RatPoly a(co_.begin(), co_.end());
  rat_trim(a);
  RatPoly b = to_rat(cyclotomic_polynomial(cond_));
  RatPoly r0 = b, r1 = a;
  RatPoly s0 = {}, s1 = {Rational(1)};
  while (true) {
    auto [q, r] = rat_divmod(r0, r1);
    if (r.empty()) break;
    // s2 = s0 - q*s1
    RatPoly qs = rat_mul(q, s1);
    RatPoly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    rat_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.size() != 1) throw std::logic_error("cyclotomic inverse: gcd not constant");
  Rational c = r1[0];
  for (auto& q : s1) q /= c;
  return make(cond_, std::move(s1));
}

CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }

CyclotomicNumber CyclotomicNumber::sqrt2() { return zeta(8) - zeta(8, 3); }
CyclotomicNumber CyclotomicNumber::sqrt3() { return zeta(12) * Rational(2) - zeta(12, 3); }
CyclotomicNumber CyclotomicNumber::sqrt5() {
  return -(CyclotomicNumber(1) + (zeta(5, 2) + zeta(5, 3)) * Rational(2));
}
CyclotomicNumber CyclotomicNumber::golden_ratio() { return -(zeta(5, 2) + zeta(5, 3)); }

CyclotomicNumber CyclotomicNumber::sqrt_of_integer(const Integer& n) {
  if (n < 0) throw std::domain_error("sqrt of negative integer");
  if (n == 0) return CyclotomicNumber(Rational(0));
  Integer square_free = 1, square = 1, m = n;
  for (Integer p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      square *= p;
      m /= p * p;
    }
    if (m % p == 0) {
      square_free *= p;
      m /= p;
    }
  }
  square_free *= m;
  CyclotomicNumber out{Rational(square)};
  // per-prime Gauss sums: sum_t (t|l) zeta_l^t equals sqrt(l) for l=1 mod 4
  // and i*sqrt(l) for l=3 mod 4; sqrt(2) comes from the 8th roots
  Integer f = square_free;
  for (Integer p = 2; p <= f; ++p) {
    if (f % p != 0) continue;
    f /= p;
    long lp = static_cast<long>(p);
    if (lp == 2) {
      out *= sqrt2();
      continue;
    }
    CyclotomicNumber g;
    for (long t = 1; t < lp; ++t) {
      long ls = legendre_symbol(t, lp);
      if (ls == 1)
        g += zeta(lp, t);
      else
        g -= zeta(lp, t);
    }
    if (lp % 4 == 3) g *= -zeta(4);  // divide out the i
    out *= g;
  }
  return out;
}

CyclotomicNumber CyclotomicNumber::sqrt_of_rational(const Rational& r) {
  if (r < 0) throw std::domain_error("sqrt of negative rational");
  return sqrt_of_integer(numer(r) * denom(r)) / CyclotomicNumber(Rational(denom(r)));
}

int CyclotomicNumber::real_sign() const {
  if (cond_ == 1) return co_[0] > 0 ? 1 : (co_[0] < 0 ? -1 : 0);
  if (!is_real()) throw std::domain_error("sign of a non-real number");
  // degree-2 case: x = u + v*w with w = sqrt(D) > 0 the irrational part
  IntPolynomial mp = minimal_polynomial(*this);
  if (mp.degree() != 2)
    throw std::domain_error("exact sign only supported up to quadratic elements");
  // x satisfies a*x^2 + b*x + c = 0; x = (-b +/- sqrt(b^2-4ac)) / 2a.
  // Decide the branch by checking x - (-b/2a) = x + b/2a against 0:
  // its square is (b^2-4ac)/4a^2 > 0, and its sign distinguishes the roots.
  Rational a(mp.c[2]), b(mp.c[1]), cc(mp.c[0]);
  CyclotomicNumber shifted = *this + CyclotomicNumber(b / (2 * a));
  // shifted = +/- sqrt(D)/2a; compare *this with each rational root candidate
  // via: sign(u + s) where s^2 known. Use: x > 0 iff (x^2 > 0 branch logic):
  // x = p + q where p = -b/2a rational and q = shifted irrational, q^2 = D/4a^2.
  Rational p = -b / (2 * a);
  Rational q2 = (b * b - 4 * a * cc) / (4 * a * a);
  // sign of q: q is a rational multiple of a fixed positive sqrt only after
  // we identify it; instead decide sign(x) directly:
  //   if p >= 0 and x zero-test fails, compare p^2 with q^2.
  // x > 0  <=>  p > |q|  or  (|q| > |p| and q > 0)
  // Determine sign(q) by testing whether x - p equals +sqrt(q2):
  CyclotomicNumber sq = sqrt_of_rational(q2);  // canonical positive root
  int qsign;
  if (shifted == sq)
    qsign = 1;
  else if (shifted == -sq)
    qsign = -1;
  else
    throw std::logic_error("quadratic sign: branch identification failed");
  if (p == 0) return qsign;
  int psign = p > 0 ? 1 : -1;
  if (psign == qsign) return psign;
  // opposite signs: larger magnitude wins; compare p^2 vs q^2
  if (p * p > q2) return psign;
  if (p * p < q2) return qsign;
  return 0;
}

Integer CyclotomicNumber::real_floor() const {
  if (cond_ == 1) {
    Integer n = numer(co_[0]), d = denom(co_[0]);
    Integer q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
  }
  // bracket by integers using exact sign comparisons
  Integer lo = -1, hi = 1;
  while ((*this - CyclotomicNumber(Rational(lo))).real_sign() < 0) lo *= 2;
  while ((*this - CyclotomicNumber(Rational(hi))).real_sign() >= 0) hi *= 2;
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if ((*this - CyclotomicNumber(Rational(mid))).real_sign() >= 0)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::string CyclotomicNumber::str() const {
  if (cond_ == 1) return to_string(co_[0]);
  std::string out;
  for (size_t i = 0; i < co_.size(); ++i) {
    if (co_[i] == 0) continue;
    std::string term;
    if (i == 0)
      term = to_string(co_[i]);
    else {
      std::string z = "z" + std::to_string(cond_) + (i == 1 ? "" : "^" + std::to_string(i));
      if (co_[i] == 1)
        term = z;
      else if (co_[i] == -1)
        term = "-" + z;
      else
        term = to_string(co_[i]) + "*" + z;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::vector<CyclotomicNumber> galois_conjugates(const CyclotomicNumber& a) {
  std::vector<CyclotomicNumber> out;
  int n = a.conductor();
  for (long j = 1; j <= n; ++j) {
    if (std::gcd(j, static_cast<long>(n)) != 1) continue;
    out.push_back(a.galois(j));
  }
  return out;
}

IntPolynomial minimal_polynomial(const CyclotomicNumber& a) {
  std::vector<CyclotomicNumber> orbit;
  for (const auto& v : galois_conjugates(a))
    if (std::find(orbit.begin(), orbit.end(), v) == orbit.end()) orbit.push_back(v);
  // product of (x - v) over the distinct conjugates
  std::vector<CyclotomicNumber> poly{CyclotomicNumber(1)};  // ascending in x
  for (const auto& v : orbit) {
    std::vector<CyclotomicNumber> next(poly.size() + 1);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= v * poly[i];
    }
    poly = std::move(next);
  }
  RatPoly rp;
  rp.reserve(poly.size());
  for (const auto& cf : poly) rp.push_back(cf.as_rational());  // Galois-stable, must be rational
  return IntPolynomial::from_rat(rp);
}

bool is_algebraic_integer(const CyclotomicNumber& a) {
  if (a.is_rational()) return is_integral(a.as_rational());
  return minimal_polynomial(a).lead() == 1;
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> A,
                                                  std::vector<Rational> b) {
  size_t rows = A.size();
  size_t cols = rows ? A[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && A[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(A[sel], A[r]);
    std::swap(b[sel], b[r]);
    Rational inv = Rational(1) / A[r][c];
    for (size_t j = c; j < cols; ++j) A[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rational f = A[i][c];
      for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace premod
