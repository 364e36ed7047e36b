#include "premod/premodular.hpp"

#include <algorithm>

#include "premod/arith.hpp"
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace premod {

SMatrix s_from_balancing(const FusionRing& ring, const DimensionVector& dims,
                         const std::vector<RootOfUnity>& twists) {
  int r = ring.rank;
  if (static_cast<int>(dims.size()) != r || static_cast<int>(twists.size()) != r)
    throw std::domain_error("s_from_balancing: shape mismatch");
  SMatrix S(r, std::vector<CyclotomicNumber>(r));
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y) {
      CyclotomicNumber sum;
      for (int k = 0; k < r; ++k) {
        int mult = ring.n(ring.dual[x], y, k);
        if (mult == 0) continue;
        sum += CyclotomicNumber(Rational(mult)) * CyclotomicNumber::from_root(twists[k]) * dims[k];
      }
      S[x][y] = sum * CyclotomicNumber::from_root(twists[x].inverse()) *
                CyclotomicNumber::from_root(twists[y].inverse());
    }
  return S;
}

PremodularDatum make_datum(const FusionRing& ring, const DimensionVector& dims,
                           const std::vector<RootOfUnity>& twists) {
  return {ring, dims, twists, s_from_balancing(ring, dims, twists)};
}

std::vector<BalancingViolation> check_balancing(const PremodularDatum& D) {
  std::vector<BalancingViolation> out;
  int r = D.ring.rank;
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y) {
      CyclotomicNumber lhs = CyclotomicNumber::from_root(D.twists[x]) *
                             CyclotomicNumber::from_root(D.twists[y]) * D.S[x][y];
      CyclotomicNumber rhs;
      for (int k = 0; k < r; ++k) {
        int mult = D.ring.n(D.ring.dual[x], y, k);
        if (mult == 0) continue;
        rhs += CyclotomicNumber(Rational(mult)) * CyclotomicNumber::from_root(D.twists[k]) *
               D.dims[k];
      }
      if (lhs != rhs) out.push_back({x, y, lhs, rhs});
    }
  return out;
}

CenterDescription muger_center(const PremodularDatum& D) {
  CenterDescription out;
  int r = D.ring.rank;
  for (int x = 0; x < r; ++x) {
    bool transparent = true;
    for (int y = 0; y < r && transparent; ++y)
      if (D.S[x][y] != D.dims[x] * D.dims[y]) transparent = false;
    if (transparent) out.indices.push_back(x);
  }
  out.tannakian = (r % 2 == 1);
  if (!out.tannakian) {
    bool all_one = true;
    for (int x : out.indices)
      if (!D.twists[x].is_one()) all_one = false;
    out.tannakian = all_one;
  }
  // identify the center's fusion ring among the named groups
  std::map<int, int> pos;
  for (size_t i = 0; i < out.indices.size(); ++i) pos[out.indices[i]] = static_cast<int>(i);
  int k = static_cast<int>(out.indices.size());
  bool closed = true;
  FusionRing sub(k, std::vector<int>(k, 0));
  for (int i = 0; i < k && closed; ++i) {
    if (!pos.count(D.ring.dual[out.indices[i]])) {
      closed = false;
      break;
    }
    sub.dual[i] = pos[D.ring.dual[out.indices[i]]];
    for (int j = 0; j < k; ++j)
      for (int c = 0; c < r; ++c) {
        int mult = D.ring.n(out.indices[i], out.indices[j], c);
        if (mult == 0) continue;
        if (!pos.count(c)) {
          closed = false;
          break;
        }
        sub.N[i][j][pos[c]] = mult;
      }
  }
  if (closed && validate(sub).empty()) {
    static const char* kCandidates[] = {"1",   "Z2",  "Z3", "Z4", "Z2xZ2", "Z5",
                                        "S3",  "D8",  "Q8", "D10", "D14",  "A4",
                                        "S4",  "A5",  "Z5:Z4", "Z7:Z3"};
    static std::map<std::string, FusionRing> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    for (const char* label : kCandidates) {
      if (!cache.count(label)) cache.emplace(label, rep_fusion_ring(named_group(label)));
      const FusionRing& cand = cache.at(label);
      if (cand.rank != k) continue;
      if (rings_isomorphic(sub, cand)) {
        out.group_label = label;
        break;
      }
    }
  }
  return out;
}

std::string to_string(DegeneracyClass c) {
  switch (c) {
    case DegeneracyClass::modular: return "modular";
    case DegeneracyClass::symmetric: return "symmetric";
    case DegeneracyClass::properly_premodular: return "properly_premodular";
  }
  return "?";
}

DegeneracyClass degeneracy_class(const PremodularDatum& D) {
  int c = static_cast<int>(muger_center(D).indices.size());
  if (c <= 1) return DegeneracyClass::modular;
  if (c == D.ring.rank) return DegeneracyClass::symmetric;
  return DegeneracyClass::properly_premodular;
}

CyclotomicNumber last_entry_value(int, const CyclotomicNumber& center_dim) {
  return -center_dim;
}

CyclotomicNumber column_orthogonality_residual(const PremodularDatum& D, int x, int y) {
  CyclotomicNumber s;
  for (int k = 0; k < D.ring.rank; ++k) s += D.S[k][x] * D.S[k][y].conjugate();
  return s;
}

std::vector<DatumViolation> check_datum(const PremodularDatum& D) {
  std::vector<DatumViolation> out;
  int r = D.ring.rank;
  for (const auto& v : validate(D.ring)) out.push_back({v.axiom, v.str()});
  if (static_cast<int>(D.dims.size()) != r || static_cast<int>(D.twists.size()) != r ||
      static_cast<int>(D.S.size()) != r) {
    out.push_back({"s-shape", "dims/T/S sizes must match the rank"});
    return out;
  }
  for (int x = 0; x < r; ++x)
    if (static_cast<int>(D.S[x].size()) != r) {
      out.push_back({"s-shape", "S row " + std::to_string(x)});
      return out;
    }
  if (!out.empty()) return out;
  if (!(D.dims[0] == CyclotomicNumber(1))) out.push_back({"dims", "dims[0] must be 1"});
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      CyclotomicNumber sum;
      for (int c = 0; c < r; ++c)
        sum += CyclotomicNumber(Rational(D.ring.n(a, b, c))) * D.dims[c];
      if (sum != D.dims[a] * D.dims[b])
        out.push_back({"dims", "dimension equation fails at (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")"});
    }
  if (!D.twists[0].is_one()) out.push_back({"twist", "twists[0] must be 1"});
  for (int x = 0; x < r; ++x) {
    if (D.S[x][0] != D.dims[x])
      out.push_back({"s-first-column", "S[" + std::to_string(x) + "][0] != d_" + std::to_string(x)});
    for (int y = 0; y < r; ++y) {
      if (D.S[x][y] != D.S[y][x])
        out.push_back({"s-symmetry", "(" + std::to_string(x) + "," + std::to_string(y) + ")"});
      if (D.S[x][y] != D.S[D.ring.dual[x]][y].conjugate())
        out.push_back({"s-symmetry", "conjugate-duality at (" + std::to_string(x) + "," +
                                         std::to_string(y) + ")"});
    }
  }
  for (const auto& bv : check_balancing(D))
    out.push_back({"balancing", "(" + std::to_string(bv.x) + "," + std::to_string(bv.y) +
                                    "): " + bv.lhs.str() + " != " + bv.rhs.str()});
  // columns split by the center: mixed pairs must be orthogonal
  auto center = muger_center(D);
  std::vector<bool> in_center(r, false);
  for (int x : center.indices) in_center[x] = true;
  for (int x = 0; x < r; ++x)
    for (int y = 0; y < r; ++y)
      if (in_center[x] != in_center[y] && !column_orthogonality_residual(D, x, y).is_zero())
        out.push_back({"orthogonality",
                       "columns " + std::to_string(x) + " and " + std::to_string(y)});
  for (int x = 0; x < r; ++x) {
    auto m = theta_condition_value(D, x);
    if (!m.rhs_integral)
      out.push_back({"theta-condition", "object " + std::to_string(x) + ": value " + m.rhs.str()});
  }
  return out;
}

std::vector<RootOfUnity> root_of_unity_solutions(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("root_of_unity_solutions: zero polynomial");
  std::vector<RootOfUnity> out;
  if (p.degree() < 1) return out;
  for (int n : roots_of_unity_with_degree_at_most(p.degree())) {
    if (divides(cyclotomic_polynomial(n), p)) {
      for (long k = 0; k < n; ++k)
        if (std::gcd(k, static_cast<long>(n)) == 1 || n == 1) out.push_back(RootOfUnity(k, n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Laurent polynomial in one unknown root of unity
using Laurent = std::map<int, CyclotomicNumber>;

void laurent_add(Laurent& into, int exp, const CyclotomicNumber& c) {
  auto it = into.find(exp);
  if (it == into.end())
    into.emplace(exp, c);
  else {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

CyclotomicNumber laurent_eval(const Laurent& L, const RootOfUnity& t) {
  CyclotomicNumber v;
  for (const auto& [e, c] : L) v += c * CyclotomicNumber::from_root(t.pow(e));
  return v;
}

}  // namespace

ThetaCondition theta_condition_residual(const FusionRing& ring, const DimensionVector& dims,
                                        const std::vector<std::optional<RootOfUnity>>& twists,
                                        int x) {
  int r = ring.rank;
  int unknown = -1;
  for (int i = 0; i < r; ++i)
    if (!twists[i]) {
      if (unknown >= 0) throw std::domain_error("theta condition: more than one unknown twist");
      unknown = i;
    }
  if (unknown < 0) throw std::domain_error("theta condition: no unknown twist");
  CyclotomicNumber d2 = global_dimension(dims);

  // E(theta) = theta^2 + theta^-2 - (1/D^2) sum_{b,c} N_{b,c}^x d_b d_c (theta_b/theta_c)^2
  Laurent E;
  laurent_add(E, 2, CyclotomicNumber(1));
  laurent_add(E, -2, CyclotomicNumber(1));
  for (int b = 0; b < r; ++b)
    for (int c = 0; c < r; ++c) {
      int mult = ring.n(b, c, x);
      if (mult == 0) continue;
      CyclotomicNumber coeff = CyclotomicNumber(Rational(mult)) * dims[b] * dims[c] / d2;
      int exp = 0;
      if (b == unknown) exp += 2;
      if (c == unknown) exp -= 2;
      if (b != unknown) coeff *= CyclotomicNumber::from_root(twists[b]->pow(2));
      if (c != unknown) coeff *= CyclotomicNumber::from_root(twists[c]->pow(-2));
      laurent_add(E, exp, -coeff);
    }

  ThetaCondition out;
  out.object = x;
  out.residual_zero = E.empty();
  if (!E.empty()) {
    int min_exp = E.begin()->first;
    RatPoly cleared(E.rbegin()->first - min_exp + 1, Rational(0));
    for (const auto& [e, c] : E) {
      if (!c.is_rational()) {
        out.residual_rational = false;
        break;
      }
      cleared[e - min_exp] = c.as_rational();
    }
    if (out.residual_rational) out.residual = IntPolynomial::from_rat(cleared);
  }

  // integrality of theta^2 + theta^-2 restricts theta to the quartic family
  std::vector<RootOfUnity> admissible_orders_roots;
  for (int m = -2; m <= 2; ++m) {
    IntPolynomial q({Integer(1), Integer(0), Integer(-m), Integer(0), Integer(1)});
    out.family.emplace_back(m, q);
    for (const auto& root : root_of_unity_solutions(q))
      if (laurent_eval(E, root).is_zero()) out.admissible.push_back(root);
  }
  std::sort(out.admissible.begin(), out.admissible.end());
  out.admissible.erase(std::unique(out.admissible.begin(), out.admissible.end()),
                       out.admissible.end());
  IntPolynomial ann({Integer(1)});
  std::set<long> orders;
  for (const auto& root : out.admissible) orders.insert(root.n);
  for (long n : orders) ann = ann * cyclotomic_polynomial(static_cast<int>(n));
  out.admissible_annihilator = ann;
  return out;
}

ThetaMembership theta_condition_value(const PremodularDatum& D, int x) {
  ThetaMembership out;
  int r = D.ring.rank;
  CyclotomicNumber d2 = global_dimension(D.dims);
  CyclotomicNumber sum;
  for (int b = 0; b < r; ++b)
    for (int c = 0; c < r; ++c) {
      int mult = D.ring.n(b, c, x);
      if (mult == 0) continue;
      sum += CyclotomicNumber(Rational(mult)) * D.dims[b] * D.dims[c] *
             CyclotomicNumber::from_root(D.twists[b].pow(2)) *
             CyclotomicNumber::from_root(D.twists[c].pow(-2));
    }
  out.rhs = sum / d2;
  out.lhs = CyclotomicNumber::from_root(D.twists[x].pow(2)) +
            CyclotomicNumber::from_root(D.twists[x].pow(-2));
  out.rhs_integral = out.rhs.is_rational() && is_integral(out.rhs.as_rational());
  return out;
}

}  // namespace premod
