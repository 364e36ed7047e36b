#include "premod/bundled.hpp"

#include <map>
#include <stdexcept>

namespace premod {

using C = CyclotomicNumber;

FusionRing su2_level_ring(int k) {
  int r = k + 1;
  FusionRing F(r, std::vector<int>(r));
  for (int j = 0; j < r; ++j) F.dual[j] = j;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        bool admissible = (a + b + c) % 2 == 0 && c >= std::abs(a - b) &&
                          c <= std::min(a + b, 2 * k - a - b);
        F.N[a][b][c] = admissible ? 1 : 0;
      }
  return F;
}

FusionRing su2_integer_spin_ring(int k) {
  // even doubled-spins are closed under the truncated fusion at every level
  FusionRing big = su2_level_ring(k);
  int r = k / 2 + 1;
  FusionRing F(r, std::vector<int>(r));
  for (int j = 0; j < r; ++j) F.dual[j] = j;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) F.N[a][b][c] = big.n(2 * a, 2 * b, 2 * c);
  return F;
}

namespace {

// ---- sl3 weight combinatorics for the level-k fusion (Kac-Walton) ----

struct Pt {
  long x = 0, y = 0;  // omega-basis coordinates
  bool operator<(const Pt& o) const { return x != o.x ? x < o.x : y < o.y; }
};

// 3 * <u, v> under the A2-invariant form
long form3(const Pt& u, const Pt& v) {
  return 2 * u.x * v.x + u.x * v.y + u.y * v.x + 2 * u.y * v.y;
}

// dominant weight multiplicities of V(a,b) via Freudenthal's recursion
std::map<Pt, long> weight_multiplicities(int a, int b) {
  const Pt alpha1{2, -1}, alpha2{-1, 2}, alpha12{1, 1};
  const Pt rho{1, 1};
  Pt lambda{a, b};
  // candidate weights: lambda - p alpha1 - q alpha2 within a safe box
  std::map<Pt, long> mult;
  Pt lr{lambda.x + rho.x, lambda.y + rho.y};
  long bound = form3(lr, lr);
  std::vector<Pt> order;  // by decreasing height p+q
  for (long p = 0; p <= a + b + 3; ++p)
    for (long q = 0; q <= a + b + 3; ++q) {
      Pt mu{lambda.x - 2 * p + q, lambda.y + p - 2 * q};
      Pt mr{mu.x + rho.x, mu.y + rho.y};
      if (form3(mr, mr) > bound) continue;
      order.push_back(mu);
    }
  std::sort(order.begin(), order.end(), [&](const Pt& u, const Pt& v) {
    // height of lambda - mu in simple roots: p+q; recover from coords
    long hu = (2 * (lambda.x - u.x) + (lambda.y - u.y)) / 3 +
              ((lambda.x - u.x) + 2 * (lambda.y - u.y)) / 3;
    long hv = (2 * (lambda.x - v.x) + (lambda.y - v.y)) / 3 +
              ((lambda.x - v.x) + 2 * (lambda.y - v.y)) / 3;
    return hu < hv;
  });
  mult[lambda] = 1;
  for (const Pt& mu : order) {
    if (mult.count(mu)) continue;
    // Freudenthal: (|l+r|^2 - |m+r|^2) m_mu = 2 sum_{alpha>0} sum_t m_{mu+t a} <mu + t a, a>
    Pt mr{mu.x + rho.x, mu.y + rho.y};
    long denom = form3(lr, lr) - form3(mr, mr);
    if (denom <= 0) continue;
    long total = 0;
    for (const Pt& alpha : {alpha1, alpha2, alpha12}) {
      for (long t = 1;; ++t) {
        Pt nu{mu.x + t * alpha.x, mu.y + t * alpha.y};
        auto it = mult.find(nu);
        if (it == mult.end()) {
          // outside the stored support once we pass the highest weight cone
          Pt nr{nu.x + rho.x, nu.y + rho.y};
          if (form3(nr, nr) > bound) break;
          continue;
        }
        total += 2 * it->second * form3(nu, alpha);
      }
    }
    if (total % denom != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
    long m = total / denom;
    if (m > 0) mult[mu] = m;
  }
  return mult;
}

}  // namespace

int sl3_fusion_coefficient(int level, Sl3Weight l, Sl3Weight m, Sl3Weight n) {
  // Racah-Speiser with the affine Weyl group at shifted level k+3:
  // reflect l + nu + rho into the open alcove, tracking signs; walls drop out
  auto wts = weight_multiplicities(m.a, m.b);
  long kk = level + 3;
  long result = 0;
  for (const auto& [nu, mu_mult] : wts) {
    long x = l.a + nu.x + 1, y = l.b + nu.y + 1;
    int sign = 1;
    bool wall = false;
    int guard = 0;
    while (true) {
      if (++guard > 500) throw std::logic_error("affine reflection failed to terminate");
      if (x == 0 || y == 0 || x + y == kk) {
        wall = true;
        break;
      }
      if (x < 0) {
        long nx = -x, ny = x + y;
        x = nx;
        y = ny;
        sign = -sign;
        continue;
      }
      if (y < 0) {
        long nx = x + y, ny = -y;
        x = nx;
        y = ny;
        sign = -sign;
        continue;
      }
      if (x + y > kk) {
        long nx = kk - y, ny = kk - x;
        x = nx;
        y = ny;
        sign = -sign;
        continue;
      }
      break;  // inside the open alcove
    }
    if (wall) continue;
    if (x - 1 == n.a && y - 1 == n.b) result += sign * mu_mult;
  }
  if (result < 0) throw std::logic_error("negative fusion coefficient");
  return static_cast<int>(result);
}

namespace {

std::vector<RootOfUnity> ones(int r) { return std::vector<RootOfUnity>(r, RootOfUnity(0, 1)); }

// quantum integer [m] at q = zeta_{2h}, expressed inside Q(zeta_h) for odd h
C quantum_integer(int m, int h) {
  if (h % 2 == 0) throw std::domain_error("quantum_integer expects odd h here");
  // zeta_{2h} = -zeta_h^{(h+1)/2}
  C q = -C::zeta(h, (h + 1) / 2);
  C qi = q.inverse();
  auto p = [&](const C& z, int e) {
    C r(1);
    for (int i = 0; i < e; ++i) r *= z;
    return r;
  };
  return (p(q, m) - p(qi, m)) / (q - qi);
}

}  // namespace

PremodularDatum rep_d8_branch_datum() {
  // order (1, z, V, g, zg): the near-group ring over the Klein four-group
  FusionRing F = relabel(make_near_group(klein_table(), 0), {0, 1, 3, 4, 2});
  DimensionVector dims = fp_dimensions(F);
  auto T = ones(5);
  T[3] = RootOfUnity(1, 2);
  T[4] = RootOfUnity(1, 2);
  return make_datum(F, dims, T);
}

PremodularDatum rep_d14_branch_datum() {
  FusionRing F = rep_fusion_ring(named_group("D14"));
  DimensionVector dims = fp_dimensions(F);
  auto T = ones(5);
  T[2] = RootOfUnity(1, 7);
  T[3] = RootOfUnity(4, 7);
  T[4] = RootOfUnity(2, 7);
  return make_datum(F, dims, T);
}

PremodularDatum rep_s4_branch_datum() {
  FusionRing F = rep_fusion_ring(named_group("S4"));
  DimensionVector dims = fp_dimensions(F);
  auto T = ones(5);
  T[3] = RootOfUnity(1, 2);
  T[4] = RootOfUnity(1, 2);
  return make_datum(F, dims, T);
}

PremodularDatum psu2_8_datum() {
  // order (1, e, X, tau, e tau): spins (0, 4, 2, 1, 3) of the integer-spin
  // level-8 ring, so that X1 X3 = X4 and dims are (1, 1, 2phi, phi^2, phi^2)
  FusionRing F = relabel(su2_integer_spin_ring(8), {0, 3, 2, 4, 1});
  DimensionVector dims = fp_dimensions(F);
  auto T = ones(5);
  T[2] = RootOfUnity(3, 5);
  T[3] = RootOfUnity(1, 5);
  T[4] = RootOfUnity(1, 5);
  return make_datum(F, dims, T);
}

PremodularDatum su2_4_datum() {
  FusionRing F = su2_level_ring(4);
  DimensionVector dims = fp_dimensions(F);
  // h_j = j(j+2)/24 for doubled spin j
  std::vector<RootOfUnity> T;
  for (int j = 0; j <= 4; ++j) T.push_back(RootOfUnity(j * (j + 2), 24));
  return make_datum(F, dims, T);
}

PremodularDatum psu2_9_datum() {
  FusionRing F = su2_integer_spin_ring(9);
  // dims [2s+1]_q, q = zeta_22, inside Q(zeta_11); degree 5 over Q
  DimensionVector dims;
  for (int s = 0; s <= 4; ++s) dims.push_back(quantum_integer(2 * s + 1, 11));
  std::vector<RootOfUnity> T;
  for (int s = 0; s <= 4; ++s) T.push_back(RootOfUnity(s * (s + 1), 11));
  return {F, dims, T, s_from_balancing(F, dims, T)};
}

PremodularDatum su5_1_datum() {
  FusionRing F = make_pointed(cyclic_table(5));
  DimensionVector dims(5, C(1));
  // h_a = a(5-a)/10 * (5-1) ... = 2a(5-a)/10 = a(5-a)/5
  std::vector<RootOfUnity> T;
  for (int a = 0; a < 5; ++a) T.push_back(RootOfUnity(2 * a * (5 - a), 10));
  return make_datum(F, dims, T);
}

PremodularDatum su3_4_z3_datum() {
  // the centralizer of the pointed Z3 inside sl3 level 4: simples are the
  // Z3-orbits; transversal chosen with trivial pointed part
  const std::vector<Sl3Weight> transversal{{0, 0}, {1, 1}, {2, 2}, {3, 0}, {0, 3}};
  auto orbit = [](Sl3Weight w) {
    std::vector<Sl3Weight> o;
    Sl3Weight cur = w;
    for (int i = 0; i < 3; ++i) {
      o.push_back(cur);
      cur = Sl3Weight{4 - cur.a - cur.b, cur.a};
    }
    return o;
  };
  FusionRing F(5, {0, 1, 2, 4, 3});  // (3,0)* = (0,3)
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int c = 0; c < 5; ++c) {
        int total = 0;
        for (const auto& nu : orbit(transversal[c]))
          total += sl3_fusion_coefficient(4, transversal[i], transversal[j], nu);
        F.N[i][j][c] = total;
      }
  // dims [a+1][b+1][a+b+2]/[2] at q = zeta_14, inside Q(zeta_7)
  DimensionVector dims;
  for (const auto& w : transversal)
    dims.push_back(quantum_integer(w.a + 1, 7) * quantum_integer(w.b + 1, 7) *
                   quantum_integer(w.a + w.b + 2, 7) / quantum_integer(2, 7));
  std::vector<RootOfUnity> T{RootOfUnity(0, 1), RootOfUnity(3, 7), RootOfUnity(1, 7),
                             RootOfUnity(6, 7), RootOfUnity(6, 7)};
  return {F, dims, T, s_from_balancing(F, dims, T)};
}

std::vector<BundledDatum> bundled_properly_premodular() {
  return {
      {"Rep(D8)-type", rep_d8_branch_datum(),
       "Z2-equivariantization of the toric code; T = diag(1,1,theta,-1,-1) with theta "
       "restricted by the twist integrality condition; theta = 1 representative"},
      {"Rep(D14)-type", rep_d14_branch_datum(),
       "adjoint subcategory of a 56-dimensional metaplectic category"},
      {"Rep(S4)-type", rep_s4_branch_datum(), "S3-equivariantization of the 3-fermion theory"},
      {"PSU(2)8", psu2_8_datum(), "Z2-equivariantization of Fib x Fib"},
  };
}

std::vector<BundledDatum> bundled_modular() {
  return {
      {"SU(2)4", su2_4_datum(), ""},
      {"SU(2)9/Z2", psu2_9_datum(), "integer-spin part of the level-9 theory"},
      {"SU(5)1", su5_1_datum(), ""},
      {"SU(3)4/Z3", su3_4_z3_datum(), "centralizer of the pointed Z3 in sl3 level 4"},
  };
}

}  // namespace premod
