#include "premod/arith.hpp"

#include <stdexcept>

namespace premod {

int euler_phi(int n) {
  if (n < 1) throw std::domain_error("euler_phi needs n >= 1");
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

long legendre_symbol(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  // Euler's criterion
  long r = 1, base = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = (r * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

std::vector<int> roots_of_unity_with_degree_at_most(int bound) {
  if (bound < 1) throw std::domain_error("bound must be positive");
  std::vector<int> out;
  // phi(n) >= sqrt(n/2), so n <= 2*bound^2 suffices; scan a bit further anyway
  int limit = 4 * bound * bound + 2;
  for (int n = 1; n <= limit; ++n)
    if (euler_phi(n) <= bound) out.push_back(n);
  return out;
}

Integer cyclotomic_degree_bound(int card_d, bool quadratic_with_unit_ratio) {
  Integer one = 1;
  return one << (card_d + (quadratic_with_unit_ratio ? 1 : 0));
}

Integer sylvester_landau_bound(int k) {
  if (k < 1) throw std::domain_error("index must be positive");
  Integer a = 1;
  for (int j = 1; j < k; ++j) a = a * (a + 1);
  return a;
}

}  // namespace premod
