#include "premod/fusion_ring.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace premod {

FusionRing::FusionRing(int r, std::vector<int> d) : rank(r), dual(std::move(d)) {
  N.assign(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
}

bool FusionRing::operator<(const FusionRing& o) const {
  if (rank != o.rank) return rank < o.rank;
  if (dual != o.dual) return dual < o.dual;
  return N < o.N;
}

std::string Violation::str() const {
  std::string s = axiom + " at (";
  for (size_t i = 0; i < where.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(where[i]);
  }
  return s + ")";
}

std::vector<Violation> validate(const FusionRing& F) {
  std::vector<Violation> v;
  int r = F.rank;
  if (r < 1) {
    v.push_back({"rank", {}});
    return v;
  }
  if (static_cast<int>(F.dual.size()) != r ||
      static_cast<int>(F.N.size()) != r) {
    v.push_back({"shape", {}});
    return v;
  }
  for (int a = 0; a < r; ++a)
    if (F.dual[a] < 0 || F.dual[a] >= r || F.dual[F.dual[a]] != a) {
      v.push_back({"duality-involution", {a}});
      return v;
    }
  if (F.dual[0] != 0) v.push_back({"duality-involution", {0}});
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        if (F.n(a, b, c) < 0) v.push_back({"nonnegativity", {a, b, c}});
        if (F.n(0, b, c) != (b == c ? 1 : 0)) {
          v.push_back({"unit", {0, b, c}});
          return v;  // everything else becomes noise
        }
        if (F.n(a, 0, c) != (a == c ? 1 : 0)) {
          v.push_back({"unit", {a, 0, c}});
          return v;
        }
      }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      if (F.n(a, b, 0) != (b == F.dual[a] ? 1 : 0))
        v.push_back({"rigidity", {a, b, 0}});
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        if (F.n(a, b, c) != F.n(b, a, c)) v.push_back({"commutativity", {a, b, c}});
        if (F.n(a, b, c) != F.n(F.dual[c], a, F.dual[b]))
          v.push_back({"frobenius-duality", {a, b, c}});
      }
  // associativity through support lists; group rings and other sparse
  // tensors stay near O(r^4)
  std::vector<std::vector<std::vector<std::pair<int, int>>>> supp(
      r, std::vector<std::vector<std::pair<int, int>>>(r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (F.n(a, b, c) > 0) supp[a][b].push_back({c, F.n(a, b, c)});
  std::vector<long> lhs(r), rhs(r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& [e, m] : supp[a][b])
          for (int d = 0; d < r; ++d) lhs[d] += static_cast<long>(m) * F.n(e, c, d);
        for (const auto& [e, m] : supp[b][c])
          for (int d = 0; d < r; ++d) rhs[d] += static_cast<long>(m) * F.n(a, e, d);
        for (int d = 0; d < r; ++d)
          if (lhs[d] != rhs[d]) v.push_back({"associativity", {a, b, c, d}});
      }
  return v;
}

namespace {

// fraction-free determinant of an integer matrix
Integer bareiss_det(std::vector<std::vector<Integer>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

IntPolynomial charpoly(const std::vector<std::vector<Integer>>& M) {
  int r = static_cast<int>(M.size());
  // interpolate det(xI - M) through r+1 integer points
  std::vector<Rational> xs, ys;
  for (int t = 0; t <= r; ++t) {
    auto A = M;
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) A[i][j] = -A[i][j];
      A[i][i] += t;
    }
    xs.emplace_back(t);
    ys.emplace_back(bareiss_det(A));
  }
  // Lagrange interpolation
  RatPoly acc;
  for (int i = 0; i <= r; ++i) {
    RatPoly term{Rational(1)};
    Rational denom_i = 1;
    for (int j = 0; j <= r; ++j) {
      if (j == i) continue;
      term = rat_mul(term, RatPoly{-xs[j], Rational(1)});
      denom_i *= xs[i] - xs[j];
    }
    Rational w = ys[i] / denom_i;
    if (acc.size() < term.size()) acc.resize(term.size(), Rational(0));
    for (size_t k = 0; k < term.size(); ++k) acc[k] += w * term[k];
  }
  rat_trim(acc);
  std::vector<Integer> c;
  for (const auto& q : acc) {
    if (!is_integral(q)) throw std::logic_error("charpoly: non-integer coefficient");
    c.push_back(numer(q));
  }
  return IntPolynomial(std::move(c));
}

bool in_interval(const CyclotomicNumber& x, const Rational& lo, const Rational& hi) {
  return (x - CyclotomicNumber(lo)).real_sign() > 0 &&
         (CyclotomicNumber(hi) - x).real_sign() >= 0;
}

}  // namespace

DimensionVector fp_dimensions(const FusionRing& F, int conductor_bound) {
  if (F.rank < 1) throw std::domain_error("fp_dimensions: empty ring");
  if (!validate(F).empty()) throw std::domain_error("fp_dimensions: invalid fusion ring");
  int r = F.rank;
  std::vector<std::vector<Integer>> M(r, std::vector<Integer>(r, 0));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) M[b][c] += F.n(a, b, c);
  IntPolynomial q = charpoly(M);
  IntPolynomial q0 = squarefree_part(q);
  auto interval = isolate_largest_real_root(q0);
  if (!interval) throw std::logic_error("fp_dimensions: no real Perron root");
  auto [lo, hi] = *interval;
  // tighten so at most one integer can sit inside
  {
    IntPolynomial sf = q0;
    while (hi - lo >= Rational(1, 4)) {
      Rational mid = (lo + hi) / 2;
      if (sturm_count(sf, mid, hi) == 1)
        lo = mid;
      else
        hi = mid;
    }
  }

  CyclotomicNumber lambda;
  bool found = false;
  // rational Perron root
  for (Integer k = numer(lo) / denom(lo) - 1; k <= numer(hi) / denom(hi) + 1; ++k) {
    if (Rational(k) <= lo || Rational(k) > hi) continue;
    if (q0.eval(Rational(k)) == 0) {
      lambda = CyclotomicNumber(Rational(k));
      found = true;
      break;
    }
  }
  if (!found) {
    // quadratic factor x^2 - sx + t of q0 owning the isolated root
    Rational bound = cauchy_root_bound(q0);
    Integer B = numer(bound) / denom(bound) + 1;
    for (Integer s = 0; !found && s <= 2 * B; ++s) {
      for (Integer t = -B * B; t <= B * B; ++t) {
        Integer disc = s * s - 4 * t;
        if (disc <= 0) continue;  // Perron root of degree 2 is irrational real
        IntPolynomial f({t, -s, Integer(1)});
        if (sturm_count(f, lo, hi) != 1) continue;
        if (!divides(f, q0)) continue;
        CyclotomicNumber sq = CyclotomicNumber::sqrt_of_integer(disc);
        if (sq.conductor() > conductor_bound)
          throw std::runtime_error(
              "fp_dimensions: eigenvalue field exceeds conductor bound " +
              std::to_string(conductor_bound));
        CyclotomicNumber root = (CyclotomicNumber(Rational(s)) + sq) / CyclotomicNumber(2);
        if (!in_interval(root, lo, hi))
          root = (CyclotomicNumber(Rational(s)) - sq) / CyclotomicNumber(2);
        if (!in_interval(root, lo, hi)) continue;
        lambda = root;
        found = true;
        break;
      }
    }
  }
  if (!found)
    throw std::runtime_error(
        "fp_dimensions: no cyclotomic realization of the Perron eigenvalue found "
        "(degree > 2 spectra are outside the supported search, conductor bound " +
        std::to_string(conductor_bound) + ")");

  // kernel of (M - lambda I); Perron eigenvalue is simple, kernel is a line
  int cols = r;
  std::vector<std::vector<CyclotomicNumber>> A(r, std::vector<CyclotomicNumber>(cols));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) {
      A[i][j] = CyclotomicNumber(Rational(M[i][j]));
      if (i == j) A[i][j] -= lambda;
    }
  std::vector<int> pivot_of_col(cols, -1);
  int row = 0;
  for (int c = 0; c < cols && row < r; ++c) {
    int sel = -1;
    for (int i = row; i < r; ++i)
      if (!A[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(A[sel], A[row]);
    CyclotomicNumber inv = A[row][c].inverse();
    for (int j = c; j < cols; ++j) A[row][j] *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == row || A[i][c].is_zero()) continue;
      CyclotomicNumber f = A[i][c];
      for (int j = c; j < cols; ++j) A[i][j] -= f * A[row][j];
    }
    pivot_of_col[c] = row;
    ++row;
  }
  int free_col = -1;
  for (int c = 0; c < cols; ++c)
    if (pivot_of_col[c] < 0) {
      if (free_col >= 0) throw std::logic_error("fp_dimensions: Perron eigenspace not a line");
      free_col = c;
    }
  if (free_col < 0) throw std::logic_error("fp_dimensions: empty Perron eigenspace");
  std::vector<CyclotomicNumber> v(cols);
  v[free_col] = CyclotomicNumber(1);
  for (int c = 0; c < cols; ++c)
    if (pivot_of_col[c] >= 0) v[c] = -A[pivot_of_col[c]][free_col];
  if (v[0].is_zero()) throw std::logic_error("fp_dimensions: eigenvector vanishes at the unit");
  CyclotomicNumber scale = v[0].inverse();
  for (auto& x : v) x *= scale;

  for (int a = 0; a < r; ++a) {
    if (v[a] != v[F.dual[a]]) throw std::logic_error("fp_dimensions: dual symmetry failed");
    if ((v[a] - CyclotomicNumber(1)).real_sign() < 0)
      throw std::logic_error("fp_dimensions: dimension below 1");
    for (int b = 0; b < r; ++b) {
      CyclotomicNumber s;
      for (int c = 0; c < r; ++c) s += CyclotomicNumber(Rational(F.n(a, b, c))) * v[c];
      if (s != v[a] * v[b]) throw std::logic_error("fp_dimensions: dimension equation failed");
    }
  }
  return v;
}

CyclotomicNumber global_dimension(const DimensionVector& dims) {
  CyclotomicNumber s;
  for (const auto& d : dims) s += d * d;
  return s;
}

std::set<int> subring_generated_by(const FusionRing& F, int a) {
  std::set<int> s{0, a, F.dual[a]};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int x : cur)
      for (int y : cur)
        for (int c = 0; c < F.rank; ++c)
          if (F.n(x, y, c) > 0 && !s.count(c)) {
            s.insert(c);
            s.insert(F.dual[c]);
            grew = true;
          }
  }
  return s;
}

GradingDecomposition universal_grading_components(const FusionRing& F) {
  GradingDecomposition out;
  int r = F.rank;
  // adjoint = subring generated by all a (x) a*
  std::set<int> adj{0};
  for (int a = 0; a < r; ++a)
    for (int c = 0; c < r; ++c)
      if (F.n(a, F.dual[a], c) > 0) adj.insert(c);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(adj.begin(), adj.end());
    for (int x : cur)
      for (int y : cur)
        for (int c = 0; c < r; ++c)
          if (F.n(x, y, c) > 0 && !adj.count(c)) {
            adj.insert(c);
            grew = true;
          }
  }
  out.adjoint.assign(adj.begin(), adj.end());
  // a ~ b when some adjoint x has b in x (x) a; saturate to an equivalence
  std::vector<int> comp(r, -1);
  for (int seed = 0; seed < r; ++seed) {
    if (comp[seed] >= 0) continue;
    int id = seed;
    std::vector<int> stack{seed};
    comp[seed] = id;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int x : adj)
        for (int b = 0; b < r; ++b)
          if ((F.n(x, a, b) > 0 || F.n(x, b, a) > 0) && comp[b] < 0) {
            comp[b] = id;
            stack.push_back(b);
          }
    }
  }
  DimensionVector dims = fp_dimensions(F);
  std::map<int, std::vector<int>> groups;
  for (int a = 0; a < r; ++a) groups[comp[a]].push_back(a);
  for (auto& [id, members] : groups) {
    (void)id;
    CyclotomicNumber total;
    for (int a : members) total += dims[a] * dims[a];
    out.components.push_back(members);
    out.totals.push_back(total);
  }
  return out;
}

FusionRing relabel(const FusionRing& F, const std::vector<int>& perm) {
  FusionRing G(F.rank, std::vector<int>(F.rank));
  for (int a = 0; a < F.rank; ++a) G.dual[perm[a]] = perm[F.dual[a]];
  for (int a = 0; a < F.rank; ++a)
    for (int b = 0; b < F.rank; ++b)
      for (int c = 0; c < F.rank; ++c) G.N[perm[a]][perm[b]][perm[c]] = F.n(a, b, c);
  return G;
}

namespace {

void foreach_unit_fixing_perm(int rank, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> tail(rank - 1);
  std::iota(tail.begin(), tail.end(), 1);
  do {
    std::vector<int> perm(rank);
    perm[0] = 0;
    for (int i = 1; i < rank; ++i) perm[i] = tail[i - 1];
    fn(perm);
  } while (std::next_permutation(tail.begin(), tail.end()));
}

}  // namespace

FusionRing canonical_form(const FusionRing& F) {
  FusionRing best = F;
  foreach_unit_fixing_perm(F.rank, [&](const std::vector<int>& perm) {
    FusionRing G = relabel(F, perm);
    if (G < best) best = G;
  });
  return best;
}

std::optional<std::vector<int>> rings_isomorphic(const FusionRing& F, const FusionRing& G) {
  if (F.rank != G.rank) return std::nullopt;
  std::optional<std::vector<int>> hit;
  foreach_unit_fixing_perm(F.rank, [&](const std::vector<int>& perm) {
    if (hit) return;
    if (relabel(F, perm) == G) hit = perm;
  });
  return hit;
}

namespace {

struct OrbitInfo {
  std::vector<std::array<int, 3>> members;
  int bound = 0;
};

// orbit of (a,b,c) under commutativity, Frobenius duality and the dual functor
std::vector<std::array<int, 3>> symmetry_orbit(std::array<int, 3> t, const std::vector<int>& dual) {
  std::set<std::array<int, 3>> seen;
  std::vector<std::array<int, 3>> stack{t};
  seen.insert(t);
  while (!stack.empty()) {
    auto [a, b, c] = stack.back();
    stack.pop_back();
    std::array<std::array<int, 3>, 4> next{{
        {b, a, c},
        {dual[a], c, b},
        {c, dual[b], a},
        {dual[a], dual[b], dual[c]},
    }};
    for (const auto& u : next)
      if (seen.insert(u).second) stack.push_back(u);
  }
  return {seen.begin(), seen.end()};
}

class Enumerator {
 public:
  Enumerator(const FusionSearch& spec) : spec_(spec), r_(spec.rank) {
    if (static_cast<int>(spec.dims.size()) != r_ || static_cast<int>(spec.dual.size()) != r_)
      throw std::domain_error("enumerate_fusion_rings: shape mismatch");
    if (!(spec.dims[0] == CyclotomicNumber(1)))
      throw std::domain_error("enumerate_fusion_rings: dims[0] must be 1");
    build_orbits();
  }

  std::vector<FusionRing> run() {
    FusionRing F(r_, spec_.dual);
    for (int a = 0; a < r_; ++a)
      for (int c = 0; c < r_; ++c) {
        F.N[0][a][c] = (a == c);
        F.N[a][0][c] = (a == c);
        F.N[a][c][0] = (c == spec_.dual[a]);
      }
    // seed the user constraints
    std::map<std::array<int, 3>, int> forced;
    for (const auto& [key, val] : spec_.assignments) {
      for (const auto& m : symmetry_orbit(key, spec_.dual)) {
        auto it = forced.find(m);
        if (it != forced.end() && it->second != val) return {};  // contradictory input
        forced[m] = val;
      }
    }
    for (const auto& [key, val] : forced) {
      auto [a, b, c] = key;
      if (a == 0 || b == 0 || c == 0) {
        if (F.n(a, b, c) != val) return {};
      }
    }
    dfs_assign(0, forced);
    std::vector<FusionRing> out(results_.begin(), results_.end());
    return out;
  }

 private:
  void build_orbits() {
    std::set<std::array<int, 3>> covered;
    for (int a = 1; a < r_; ++a)
      for (int b = 1; b < r_; ++b)
        for (int c = 1; c < r_; ++c) {
          std::array<int, 3> t{a, b, c};
          if (covered.count(t)) continue;
          OrbitInfo info;
          info.members = symmetry_orbit(t, spec_.dual);
          bool trivial = false;
          for (const auto& m : info.members) {
            covered.insert(m);
            if (m[0] == 0 || m[1] == 0 || m[2] == 0) trivial = true;
          }
          if (trivial) continue;  // forced by unit/rigidity
          // entrywise cap: FP value of d_a d_b / d_c, minimized over the orbit
          Integer cap = -1;
          for (const auto& m : info.members) {
            CyclotomicNumber q = spec_.dims[m[0]] * spec_.dims[m[1]] / spec_.dims[m[2]];
            Integer f = q.real_floor();
            if (cap < 0 || f < cap) cap = f;
          }
          info.bound = static_cast<int>(cap);
          orbits_.push_back(std::move(info));
        }
  }

  bool row_complete_ok(FusionRing& F, const std::map<std::array<int, 3>, int>& assigned,
                       int upto_orbit) {
    // exact dimension equation on every fully determined row
    for (int a = 1; a < r_; ++a)
      for (int b = a; b < r_; ++b) {
        bool full = true;
        CyclotomicNumber sum;
        for (int c = 0; c < r_; ++c) {
          std::array<int, 3> key{a, b, c};
          if (c == 0) {
            sum += CyclotomicNumber(Rational(F.n(a, b, 0)));
            continue;
          }
          auto it = assigned.find(key);
          if (it == assigned.end()) {
            full = false;
            continue;
          }
          sum += CyclotomicNumber(Rational(it->second)) * spec_.dims[c];
        }
        CyclotomicNumber target = spec_.dims[a] * spec_.dims[b];
        if (full) {
          if (sum != target) return false;
        } else {
          if ((target - sum).real_sign() < 0) return false;  // already overweight
        }
      }
    (void)upto_orbit;
    return true;
  }

  void dfs_assign(size_t oi, std::map<std::array<int, 3>, int>& assigned) {
    if (++nodes_ > spec_.node_budget)
      throw SearchSpaceExceeded("enumerate_fusion_rings: node budget exhausted");
    if (oi == orbits_.size()) {
      finalize(assigned);
      return;
    }
    const OrbitInfo& orbit = orbits_[oi];
    const auto& rep = orbit.members.front();
    auto preset = assigned.find(rep);
    int lo = 0, hi = orbit.bound;
    if (preset != assigned.end()) lo = hi = preset->second;
    for (int val = lo; val <= hi; ++val) {
      std::vector<std::array<int, 3>> added;
      bool ok = true;
      for (const auto& m : orbit.members) {
        auto it = assigned.find(m);
        if (it != assigned.end()) {
          if (it->second != val) {
            ok = false;
            break;
          }
        } else {
          assigned.emplace(m, val);
          added.push_back(m);
        }
      }
      if (ok) {
        FusionRing F = base_ring(assigned);
        if (row_complete_ok(F, assigned, static_cast<int>(oi))) dfs_assign(oi + 1, assigned);
      }
      for (const auto& m : added) assigned.erase(m);
    }
  }

  FusionRing base_ring(const std::map<std::array<int, 3>, int>& assigned) {
    FusionRing F(r_, spec_.dual);
    for (int a = 0; a < r_; ++a)
      for (int c = 0; c < r_; ++c) {
        F.N[0][a][c] = (a == c);
        F.N[a][0][c] = (a == c);
      }
    for (int a = 0; a < r_; ++a)
      for (int b = 0; b < r_; ++b) F.N[a][b][0] = (b == spec_.dual[a]);
    for (const auto& [key, val] : assigned) F.N[key[0]][key[1]][key[2]] = val;
    return F;
  }

  void finalize(const std::map<std::array<int, 3>, int>& assigned) {
    FusionRing F = base_ring(assigned);
    if (!validate(F).empty()) return;
    // confirm the dimension equation exactly
    for (int a = 0; a < r_; ++a)
      for (int b = 0; b < r_; ++b) {
        CyclotomicNumber sum;
        for (int c = 0; c < r_; ++c)
          sum += CyclotomicNumber(Rational(F.n(a, b, c))) * spec_.dims[c];
        if (sum != spec_.dims[a] * spec_.dims[b]) return;
      }
    results_.insert(canonical_under_dims(F));
  }

  FusionRing canonical_under_dims(const FusionRing& F) {
    // smallest relabeling fixing the unit and preserving the given dims
    FusionRing best = F;
    foreach_unit_fixing_perm(r_, [&](const std::vector<int>& perm) {
      for (int a = 0; a < r_; ++a) {
        if (!(spec_.dims[perm[a]] == spec_.dims[a])) return;
        if (perm[spec_.dual[a]] != spec_.dual[perm[a]]) return;
      }
      FusionRing G = relabel(F, perm);
      if (G < best) best = G;
    });
    return best;
  }

  const FusionSearch& spec_;
  int r_;
  std::vector<OrbitInfo> orbits_;
  long nodes_ = 0;
  std::set<FusionRing> results_;
};

}  // namespace

std::vector<FusionRing> enumerate_fusion_rings(const FusionSearch& spec) {
  Enumerator e(spec);
  return e.run();
}

std::vector<FusionRing> enumerate_fusion_rings_bruteforce(const FusionSearch& spec) {
  int r = spec.rank;
  std::vector<std::array<int, 3>> slots;
  for (int a = 1; a < r; ++a)
    for (int b = 1; b < r; ++b)
      for (int c = 1; c < r; ++c) slots.push_back({a, b, c});
  std::vector<Integer> caps;
  for (auto& s : slots)
    caps.push_back((spec.dims[s[0]] * spec.dims[s[1]] / spec.dims[s[2]]).real_floor());
  std::set<FusionRing> results;
  FusionRing F(r, spec.dual);
  for (int a = 0; a < r; ++a)
    for (int c = 0; c < r; ++c) {
      F.N[0][a][c] = (a == c);
      F.N[a][0][c] = (a == c);
    }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) F.N[a][b][0] = (b == spec.dual[a]);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == slots.size()) {
      for (const auto& [key, val] : spec.assignments)
        if (F.n(key[0], key[1], key[2]) != val) return;
      if (!validate(F).empty()) return;
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
          CyclotomicNumber sum;
          for (int c = 0; c < r; ++c)
            sum += CyclotomicNumber(Rational(F.n(a, b, c))) * spec.dims[c];
          if (sum != spec.dims[a] * spec.dims[b]) return;
        }
      FusionRing best = F;
      foreach_unit_fixing_perm(r, [&](const std::vector<int>& perm) {
        for (int a = 0; a < r; ++a) {
          if (!(spec.dims[perm[a]] == spec.dims[a])) return;
          if (perm[spec.dual[a]] != spec.dual[perm[a]]) return;
        }
        FusionRing G = relabel(F, perm);
        if (G < best) best = G;
      });
      results.insert(best);
      return;
    }
    auto [a, b, c] = slots[i];
    for (int v = 0; Integer(v) <= caps[i]; ++v) {
      F.N[a][b][c] = v;
      rec(i + 1);
    }
    F.N[a][b][c] = 0;
  };
  rec(0);
  return {results.begin(), results.end()};
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<std::vector<int>> klein_table() {
  return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

FusionRing make_pointed(const std::vector<std::vector<int>>& cayley) {
  int n = static_cast<int>(cayley.size());
  std::vector<int> dual(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cayley[i][j] == 0) dual[i] = j;
  FusionRing F(n, dual);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) F.N[i][j][cayley[i][j]] = 1;
  return F;
}

FusionRing make_near_group(const std::vector<std::vector<int>>& cayley, int t) {
  int n = static_cast<int>(cayley.size());
  int x = n;  // index of the non-invertible object
  std::vector<int> dual(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cayley[i][j] == 0) dual[i] = j;
  dual[x] = x;
  FusionRing F(n + 1, dual);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) F.N[i][j][cayley[i][j]] = 1;
  for (int i = 0; i < n; ++i) {
    F.N[i][x][x] = 1;
    F.N[x][i][x] = 1;
  }
  for (int i = 0; i < n; ++i) F.N[x][x][i] = 1;
  F.N[x][x][x] = t;
  return F;
}

FusionRing fib_ring() {
  FusionRing F(2, {0, 1});
  F.N[0][0][0] = 1;
  F.N[0][1][1] = 1;
  F.N[1][0][1] = 1;
  F.N[1][1][0] = 1;
  F.N[1][1][1] = 1;
  return F;
}

}  // namespace premod
