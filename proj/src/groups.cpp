#include "premod/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace premod {

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.img.resize(degree);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
  Permutation p = identity(degree);
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad cycle notation '" + text + "': " + why);
  };
  while (i < text.size()) {
    if (isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<int> cycle;
    while (true) {
      while (i < text.size() && (isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!isdigit(static_cast<unsigned char>(text[i]))) fail("expected point");
      int v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree) fail("point " + std::to_string(v) + " out of range");
      cycle.push_back(v - 1);
    }
    if (cycle.size() < 2) continue;  // fixed point, harmless
    std::set<int> seen(cycle.begin(), cycle.end());
    if (seen.size() != cycle.size()) fail("repeated point in cycle");
    for (size_t j = 0; j < cycle.size(); ++j) {
      if (p.img[cycle[j]] != cycle[j]) fail("point moved twice");
    }
    for (size_t j = 0; j < cycle.size(); ++j)
      p.img[cycle[j]] = cycle[(j + 1) % cycle.size()];
  }
  return p;
}

Permutation Permutation::compose(const Permutation& then) const {
  Permutation r;
  r.img.resize(img.size());
  for (size_t x = 0; x < img.size(); ++x) r.img[x] = then.img[img[x]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img.resize(img.size());
  for (size_t x = 0; x < img.size(); ++x) r.img[img[x]] = static_cast<int>(x);
  return r;
}

bool Permutation::is_identity() const {
  for (size_t x = 0; x < img.size(); ++x)
    if (img[x] != static_cast<int>(x)) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::vector<bool> done(img.size(), false);
  std::string out;
  for (size_t s = 0; s < img.size(); ++s) {
    if (done[s] || img[s] == static_cast<int>(s)) continue;
    out += "(";
    size_t x = s;
    bool first = true;
    do {
      if (!first) out += ",";
      out += std::to_string(x + 1);
      done[x] = true;
      x = img[x];
      first = false;
    } while (x != s);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

FiniteGroup FiniteGroup::from_generators(int degree, std::vector<Permutation> gens,
                                         std::string name, int max_order) {
  FiniteGroup G;
  G.degree = degree;
  G.name = std::move(name);
  G.generators = gens;
  std::map<Permutation, int> index;
  G.elements.push_back(Permutation::identity(degree));
  index[G.elements[0]] = 0;
  for (size_t head = 0; head < G.elements.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = G.elements[head].compose(g);
      if (index.emplace(next, static_cast<int>(G.elements.size())).second) {
        G.elements.push_back(next);
        if (static_cast<int>(G.elements.size()) > max_order)
          throw std::runtime_error("group closure exceeds order bound " +
                                   std::to_string(max_order));
      }
    }
  }
  int n = G.order();
  G.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.mul[a][b] = index.at(G.elements[a].compose(G.elements[b]));
  G.inv.resize(n);
  for (int a = 0; a < n; ++a) G.inv[a] = index.at(G.elements[a].inverse());
  G.elt_order.resize(n);
  for (int a = 0; a < n; ++a) {
    int o = 1, x = a;
    while (x != 0) {
      x = G.mul[x][a];
      ++o;
    }
    G.elt_order[a] = o;
  }
  return G;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul[a][b] != mul[b][a]) return false;
  return true;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int o : elt_order) e = std::lcm(e, o);
  return e;
}

const std::vector<std::vector<int>>& FiniteGroup::conjugacy_classes() const {
  if (!classes_.empty()) return classes_;
  int n = order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    std::vector<int> orbit{a};
    cls[a] = static_cast<int>(classes.size());
    for (size_t head = 0; head < orbit.size(); ++head) {
      int x = orbit[head];
      for (int g = 0; g < n; ++g) {
        int y = mul[mul[g][x]][inv[g]];
        if (cls[y] < 0) {
          cls[y] = cls[a];
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  std::sort(classes.begin(), classes.end(), [&](const auto& A, const auto& B) {
    if (A[0] == 0 || B[0] == 0) return A[0] == 0;
    int oa = elt_order[A[0]], ob = elt_order[B[0]];
    if (oa != ob) return oa < ob;
    if (A.size() != B.size()) return A.size() < B.size();
    return A[0] < B[0];
  });
  classes_ = std::move(classes);
  return classes_;
}

int conjugacy_class_count(const FiniteGroup& G) {
  return static_cast<int>(G.conjugacy_classes().size());
}

FiniteGroup named_group(const std::string& label) {
  auto build = [](int degree, const std::string& name,
                  std::initializer_list<const char*> gens) {
    std::vector<Permutation> ps;
    for (const char* g : gens) ps.push_back(Permutation::from_cycles(g, degree));
    return FiniteGroup::from_generators(degree, std::move(ps), name);
  };
  if (label == "1" || label == "Z1") return build(1, "1", {"()"});
  if (label == "Z2") return build(2, "Z2", {"(1,2)"});
  if (label == "Z3") return build(3, "Z3", {"(1,2,3)"});
  if (label == "Z4") return build(4, "Z4", {"(1,2,3,4)"});
  if (label == "Z2xZ2") return build(4, "Z2xZ2", {"(1,2)", "(3,4)"});
  if (label == "Z5") return build(5, "Z5", {"(1,2,3,4,5)"});
  if (label == "S3") return build(3, "S3", {"(1,2,3)", "(1,2)"});
  if (label == "D8") return build(4, "D8", {"(1,2,3,4)", "(1,3)"});
  if (label == "Q8")
    return build(8, "Q8", {"(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"});
  if (label == "D10") return build(5, "D10", {"(1,2,3,4,5)", "(2,5)(3,4)"});
  if (label == "D14") return build(7, "D14", {"(1,2,3,4,5,6,7)", "(2,7)(3,6)(4,5)"});
  if (label == "A4") return build(4, "A4", {"(1,2,3)", "(1,2)(3,4)"});
  if (label == "S4") return build(4, "S4", {"(1,2,3,4)", "(1,2)"});
  if (label == "A5") return build(5, "A5", {"(1,2,3,4,5)", "(1,2,3)"});
  if (label == "Z5:Z4") return build(5, "Z5:Z4", {"(1,2,3,4,5)", "(2,3,5,4)"});
  if (label == "Z7:Z3" || label == "Z3:Z7")  // both names denote the order-21 group
    return build(7, "Z7:Z3", {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"});
  throw std::invalid_argument("unknown group label: " + label);
}

namespace {

// ---- abelian character tables via invariant-factor style decomposition ----

CharacterTable abelian_table(const FiniteGroup& G) {
  int n = G.order();
  // peel off cyclic factors: repeatedly take an element of maximal order
  // modulo the subgroup generated so far, corrected to intersect trivially
  std::vector<int> basis;        // element indices
  std::vector<int> basis_order;  // orders of the cyclic factors
  std::set<int> H{0};
  auto grow = [&](std::set<int>& sub, int g) {
    std::set<int> out = sub;
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(out.begin(), out.end());
      for (int x : cur) {
        int y = G.mul[x][g];
        if (out.insert(y).second) grew = true;
      }
      for (int x : cur)
        for (int y : cur)
          if (out.insert(G.mul[x][y]).second) grew = true;
    }
    return out;
  };
  while (static_cast<int>(H.size()) < n) {
    int best = -1, best_ord = 0;
    for (int g = 0; g < n; ++g) {
      if (H.count(g)) continue;
      int m = 1, x = g;  // order of g modulo H
      while (!H.count(x)) {
        x = G.mul[x][g];
        ++m;
      }
      if (m > best_ord) {
        best_ord = m;
        best = g;
      }
    }
    // correct so the new generator has full order best_ord in G over <basis>
    // g^m in H; write g^m as a product over the current basis and divide out
    int g = best, m = best_ord;
    int gm = 0;
    for (int i = 0; i < m; ++i) gm = G.mul[gm][g];
    // brute-force a correction h in H with (g h)^m == identity
    int corrected = -1;
    for (int h : H) {
      int gh = G.mul[g][h];
      int x = 0;
      for (int i = 0; i < m; ++i) x = G.mul[x][gh];
      if (x == 0) {
        corrected = gh;
        break;
      }
    }
    if (corrected < 0) throw std::logic_error("abelian basis correction failed");
    basis.push_back(corrected);
    basis_order.push_back(m);
    H = grow(H, corrected);
  }
  // coordinates of every element in the basis
  int k = static_cast<int>(basis.size());
  std::map<int, std::vector<int>> coord;
  std::vector<int> zero(k, 0);
  coord[0] = zero;
  std::vector<int> frontier{0};
  for (int i = 0; i < k; ++i) {
    std::vector<std::pair<int, std::vector<int>>> cur(coord.begin(), coord.end());
    for (auto& [e, c] : cur) {
      int x = e;
      for (int t = 1; t < basis_order[i]; ++t) {
        x = G.mul[x][basis[i]];
        auto cc = c;
        cc[i] = t;
        coord[x] = cc;
      }
    }
  }
  CharacterTable T;
  T.class_sizes.assign(n, 1);
  T.class_reps.resize(n);
  T.class_orders.resize(n);
  const auto& classes = G.conjugacy_classes();
  std::map<int, int> class_of_rep;
  for (int j = 0; j < n; ++j) {
    T.class_reps[j] = classes[j][0];
    T.class_orders[j] = G.elt_order[classes[j][0]];
    class_of_rep[classes[j][0]] = j;
  }
  T.inverse_class.resize(n);
  for (int j = 0; j < n; ++j) T.inverse_class[j] = class_of_rep.at(G.inv[T.class_reps[j]]);
  // characters indexed by dual tuples
  std::vector<std::vector<int>> tuples{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples)
      for (int v = 0; v < basis_order[i]; ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(u);
      }
    tuples = std::move(next);
  }
  std::vector<std::pair<std::vector<CyclotomicNumber>, std::vector<int>>> rows;
  for (const auto& t : tuples) {
    std::vector<CyclotomicNumber> row(n);
    for (int j = 0; j < n; ++j) {
      const auto& c = coord.at(T.class_reps[j]);
      // character value: product zeta_{n_i}^{t_i c_i} -> a single root of unity
      RootOfUnity r(0, 1);
      for (int i = 0; i < k; ++i) r = r * RootOfUnity(static_cast<long>(t[i]) * c[i], basis_order[i]);
      row[j] = CyclotomicNumber::from_root(r);
    }
    rows.emplace_back(std::move(row), t);
  }
  // trivial row first, the rest sorted lexicographically
  std::sort(rows.begin(), rows.end(), [](const auto& A, const auto& B) {
    bool ta = std::all_of(A.first.begin(), A.first.end(),
                          [](const CyclotomicNumber& x) { return x == CyclotomicNumber(1); });
    bool tb = std::all_of(B.first.begin(), B.first.end(),
                          [](const CyclotomicNumber& x) { return x == CyclotomicNumber(1); });
    if (ta != tb) return ta;
    return A.first < B.first;
  });
  std::map<std::vector<int>, int> tuple_index;
  for (int i = 0; i < n; ++i) tuple_index[rows[i].second] = i;
  T.product.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> sum(k);
      for (int d = 0; d < k; ++d)
        sum[d] = (rows[i].second[d] + rows[j].second[d]) % basis_order[d];
      T.product[i][j] = tuple_index.at(sum);
    }
  for (auto& [row, t] : rows) {
    (void)t;
    T.chars.push_back(std::move(row));
  }
  T.degrees.assign(n, 1);
  return T;
}

// ---- Dixon's method for the general case ----

long mulm(long a, long b, long p) { return (a * b) % p; }

long powm(long a, long e, long p) {
  long r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

long invm(long a, long p) { return powm(a, p - 2, p); }

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct ModMat {
  int n = 0;
  long p = 0;
  std::vector<std::vector<long>> a;
};

// roots in F_p of the characteristic polynomial of a (via interpolated det)
std::vector<long> eigenvalues_mod_p(const ModMat& M) {
  int n = M.n;
  long p = M.p;
  auto det = [&](std::vector<std::vector<long>> m) {
    long d = 1;
    for (int c = 0; c < n; ++c) {
      int piv = -1;
      for (int r = c; r < n; ++r)
        if (m[r][c] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0L;
      if (piv != c) {
        std::swap(m[piv], m[c]);
        d = p - d;
      }
      d = mulm(d, m[c][c], p);
      long ic = invm(m[c][c], p);
      for (int r = c + 1; r < n; ++r) {
        if (m[r][c] == 0) continue;
        long f = mulm(m[r][c], ic, p);
        for (int cc = c; cc < n; ++cc) m[r][cc] = (m[r][cc] + p - mulm(f, m[c][cc], p)) % p;
      }
    }
    return d % p;
  };
  // charpoly coefficients by interpolation at 0..n
  std::vector<long> xs, ys;
  for (long t = 0; t <= n; ++t) {
    auto m = M.a;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = (i == j) ? ((t + p - m[i][j] % p) % p) : ((p - m[i][j] % p) % p);
    xs.push_back(t);
    ys.push_back(det(m));
  }
  // Lagrange interpolation over F_p
  std::vector<long> poly(n + 2, 0);
  for (int i = 0; i <= n; ++i) {
    std::vector<long> term{1};
    long denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<long> nt(term.size() + 1, 0);
      for (size_t d = 0; d < term.size(); ++d) {
        nt[d + 1] = (nt[d + 1] + term[d]) % p;
        nt[d] = (nt[d] + mulm(term[d], (p - xs[j] % p) % p, p)) % p;
      }
      term = std::move(nt);
      denom = mulm(denom, (xs[i] - xs[j] % p + p) % p, p);
    }
    long w = mulm(ys[i], invm(denom, p), p);
    for (size_t d = 0; d < term.size(); ++d) poly[d] = (poly[d] + mulm(w, term[d], p)) % p;
  }
  std::vector<long> roots;
  for (long x = 0; x < p; ++x) {
    long v = 0;
    for (int d = static_cast<int>(poly.size()) - 1; d >= 0; --d) v = (mulm(v, x, p) + poly[d]) % p;
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

CharacterTable dixon_table(const FiniteGroup& G) {
  const auto& classes = G.conjugacy_classes();
  int k = static_cast<int>(classes.size());
  int n = G.order();
  int e = G.exponent();
  long p = 2 * n + 1;
  while (p % e != 1 || !is_prime(p)) ++p;

  CharacterTable T;
  T.class_sizes.resize(k);
  T.class_reps.resize(k);
  T.class_orders.resize(k);
  std::vector<int> class_of(n);
  for (int j = 0; j < k; ++j) {
    T.class_sizes[j] = static_cast<int>(classes[j].size());
    T.class_reps[j] = classes[j][0];
    T.class_orders[j] = G.elt_order[classes[j][0]];
    for (int x : classes[j]) class_of[x] = j;
  }
  std::vector<int> inverse_class(k);
  for (int j = 0; j < k; ++j) inverse_class[j] = class_of[G.inv[T.class_reps[j]]];
  T.inverse_class = inverse_class;
  T.modulus = p;

  // class algebra structure constants a[i][j][l]
  std::vector<std::vector<std::vector<long>>> a(
      k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<long> count(k, 0);
      for (int x : classes[i])
        for (int y : classes[j]) ++count[class_of[G.mul[x][y]]];
      for (int l = 0; l < k; ++l) {
        // count = a_{ijl} * |C_l| occurrences of elements of class l
        if (count[l] % T.class_sizes[l] != 0)
          throw std::logic_error("class algebra constants not integral");
        a[i][j][l] = count[l] / T.class_sizes[l];
      }
    }

  // split the common eigenspaces of the class matrices over F_p
  std::vector<std::vector<std::vector<long>>> spaces;  // list of bases, vectors length k
  {
    std::vector<std::vector<long>> full;
    for (int i = 0; i < k; ++i) {
      std::vector<long> v(k, 0);
      v[i] = 1;
      full.push_back(v);
    }
    spaces.push_back(full);
  }
  for (int i = 1; i < k; ++i) {
    // matrix of class i acting: (M_i)_{jl} = a[i][j][l] transposed action on
    // vectors indexed by l: (M v)_j = sum_l a[i][j][l] v_l
    bool all_split = true;
    for (const auto& sp : spaces)
      if (sp.size() > 1) all_split = false;
    if (all_split) break;
    std::vector<std::vector<std::vector<long>>> next;
    for (auto& sp : spaces) {
      if (sp.size() == 1) {
        next.push_back(sp);
        continue;
      }
      int d = static_cast<int>(sp.size());
      // images of basis vectors under M_i, then coordinates in the basis
      std::vector<std::vector<long>> img(d, std::vector<long>(k, 0));
      for (int b = 0; b < d; ++b)
        for (int j = 0; j < k; ++j) {
          long s = 0;
          for (int l = 0; l < k; ++l) s = (s + mulm(a[i][j][l] % p, sp[b][l], p)) % p;
          img[b][j] = s;
        }
      // solve sp^T * R = img^T column by column (coordinates of img in basis sp)
      // build matrix with columns = basis vectors
      std::vector<std::vector<long>> A(k, std::vector<long>(d + d, 0));
      ModMat R;
      R.n = d;
      R.p = p;
      R.a.assign(d, std::vector<long>(d, 0));
      for (int b = 0; b < d; ++b) {
        // least squares not needed; basis columns are independent, use gaussian
        // elimination on [basis | img_b]
        std::vector<std::vector<long>> M(k, std::vector<long>(d + 1, 0));
        for (int r = 0; r < k; ++r) {
          for (int c = 0; c < d; ++c) M[r][c] = sp[c][r];
          M[r][d] = img[b][r];
        }
        int row = 0;
        std::vector<int> piv(d, -1);
        for (int c = 0; c < d && row < k; ++c) {
          int sel = -1;
          for (int r = row; r < k; ++r)
            if (M[r][c] != 0) {
              sel = r;
              break;
            }
          if (sel < 0) continue;
          std::swap(M[sel], M[row]);
          long ic = invm(M[row][c], p);
          for (int cc = c; cc <= d; ++cc) M[row][cc] = mulm(M[row][cc], ic, p);
          for (int r = 0; r < k; ++r) {
            if (r == row || M[r][c] == 0) continue;
            long f = M[r][c];
            for (int cc = c; cc <= d; ++cc)
              M[r][cc] = (M[r][cc] + p - mulm(f, M[row][cc], p)) % p;
          }
          piv[c] = row++;
        }
        for (int c = 0; c < d; ++c) R.a[c][b] = piv[c] >= 0 ? M[piv[c]][d] : 0;
      }
      (void)A;
      auto lambdas = eigenvalues_mod_p(R);
      std::sort(lambdas.begin(), lambdas.end());
      lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
      if (lambdas.size() <= 1) {
        next.push_back(sp);
        continue;
      }
      for (long lam : lambdas) {
        // kernel of R - lam I
        std::vector<std::vector<long>> M = R.a;
        for (int r = 0; r < d; ++r) M[r][r] = (M[r][r] + p - lam) % p;
        // row reduce
        int row = 0;
        std::vector<int> pivcol;
        for (int c = 0; c < d && row < d; ++c) {
          int sel = -1;
          for (int r = row; r < d; ++r)
            if (M[r][c] != 0) {
              sel = r;
              break;
            }
          if (sel < 0) continue;
          std::swap(M[sel], M[row]);
          long ic = invm(M[row][c], p);
          for (int cc = 0; cc < d; ++cc) M[row][cc] = mulm(M[row][cc], ic, p);
          for (int r = 0; r < d; ++r) {
            if (r == row || M[r][c] == 0) continue;
            long f = M[r][c];
            for (int cc = 0; cc < d; ++cc)
              M[r][cc] = (M[r][cc] + p - mulm(f, M[row][cc], p)) % p;
          }
          pivcol.push_back(c);
          ++row;
        }
        std::set<int> pivset(pivcol.begin(), pivcol.end());
        std::vector<std::vector<long>> base;
        for (int c = 0; c < d; ++c) {
          if (pivset.count(c)) continue;
          std::vector<long> coords(d, 0);
          coords[c] = 1;
          for (size_t r = 0; r < pivcol.size(); ++r) coords[pivcol[r]] = (p - M[r][c]) % p;
          // back to length-k vectors
          std::vector<long> vec(k, 0);
          for (int b = 0; b < d; ++b)
            for (int l = 0; l < k; ++l) vec[l] = (vec[l] + mulm(coords[b], sp[b][l], p)) % p;
          base.push_back(vec);
        }
        if (!base.empty()) next.push_back(base);
      }
    }
    spaces = std::move(next);
  }
  for (const auto& sp : spaces)
    if (sp.size() != 1) throw std::logic_error("class algebra failed to split");

  // z: primitive e-th root of unity mod p, fixing the lift zeta_e -> z
  long z = 0;
  for (long cand = 2; cand < p; ++cand) {
    if (powm(cand, e, p) != 1) continue;
    bool prim = true;
    for (int d = 1; d < e; ++d)
      if (e % d == 0 && powm(cand, d, p) == 1) {
        prim = false;
        break;
      }
    if (prim) {
      z = cand;
      break;
    }
  }
  if (z == 0) throw std::logic_error("no primitive root found mod p");

  // power map: class of rep_j^t
  std::vector<std::vector<int>> power_class(k);
  for (int j = 0; j < k; ++j) {
    int m = T.class_orders[j];
    power_class[j].resize(m);
    int x = 0;
    for (int t = 0; t < m; ++t) {
      power_class[j][t] = class_of[x];
      x = G.mul[x][T.class_reps[j]];
    }
  }

  std::vector<std::vector<CyclotomicNumber>> rows;
  for (const auto& sp : spaces) {
    const auto& v0 = sp[0];
    // normalize: value at identity class must be 1 (omega_0 = 1)
    if (v0[0] == 0) throw std::logic_error("eigenvector vanishes at identity class");
    long norm = invm(v0[0], p);
    std::vector<long> v(k);
    for (int l = 0; l < k; ++l) v[l] = mulm(v0[l], norm, p);
    // degree from sum_l v_l v_{l*} / |C_l| = |G| / chi(1)^2
    long s = 0;
    for (int l = 0; l < k; ++l)
      s = (s + mulm(mulm(v[l], v[inverse_class[l]], p), invm(T.class_sizes[l] % p, p), p)) % p;
    long d2 = mulm(n % p, invm(s, p), p);
    int deg = -1;
    for (int cand = 1; cand * cand <= n; ++cand)
      if (static_cast<long>(cand) * cand % p == d2) {
        deg = cand;
        break;
      }
    if (deg < 0) throw std::logic_error("character degree not recovered");
    // chi(g_l) mod p
    std::vector<long> chi_p(k);
    for (int l = 0; l < k; ++l)
      chi_p[l] = mulm(mulm(static_cast<long>(deg), v[l], p), invm(T.class_sizes[l] % p, p), p);
    T.chars_mod.push_back(chi_p);
    // exact lift per class via the cyclic DFT
    std::vector<CyclotomicNumber> row(k);
    for (int l = 0; l < k; ++l) {
      int m = T.class_orders[l];
      long wm = powm(z, e / m, p);  // fixes zeta_m -> wm
      CyclotomicNumber val;
      for (int j = 0; j < m; ++j) {
        long nj = 0;
        for (int t = 0; t < m; ++t) {
          long w = powm(wm, (static_cast<long>(m) - j) * t % m, p);
          nj = (nj + mulm(chi_p[power_class[l][t]], w, p)) % p;
        }
        nj = mulm(nj, invm(m % p, p), p);
        if (nj > static_cast<long>(n)) throw std::logic_error("bad DFT multiplicity");
        if (nj != 0) val += CyclotomicNumber(Rational(nj)) * CyclotomicNumber::zeta(m, j);
      }
      row[l] = val;
    }
    if (!(row[0] == CyclotomicNumber(deg))) throw std::logic_error("degree/lift mismatch");
    rows.push_back(std::move(row));
  }
  std::vector<int> order_idx(rows.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  auto row_less = [&](int ia, int ib) {
    const auto& A = rows[ia];
    const auto& B = rows[ib];
    // trivial first, then by degree, then lexicographically
    bool ta = std::all_of(A.begin(), A.end(),
                          [](const CyclotomicNumber& x) { return x == CyclotomicNumber(1); });
    bool tb = std::all_of(B.begin(), B.end(),
                          [](const CyclotomicNumber& x) { return x == CyclotomicNumber(1); });
    if (ta != tb) return ta;
    if (!(A[0] == B[0])) return A[0].as_rational() < B[0].as_rational();
    return A < B;
  };
  std::sort(order_idx.begin(), order_idx.end(), row_less);
  std::vector<std::vector<CyclotomicNumber>> sorted_rows;
  std::vector<std::vector<long>> sorted_mod;
  for (int idx : order_idx) {
    sorted_rows.push_back(std::move(rows[idx]));
    sorted_mod.push_back(std::move(T.chars_mod[idx]));
  }
  T.chars = std::move(sorted_rows);
  T.chars_mod = std::move(sorted_mod);
  T.degrees.resize(k);
  for (int i = 0; i < k; ++i) T.degrees[i] = static_cast<int>(numer(T.chars[i][0].as_rational()));
  return T;
}

void verify_table(const FiniteGroup& G, const CharacterTable& T) {
  int k = static_cast<int>(T.chars.size());
  long n = G.order();
  Integer degsum = 0;
  for (int d : T.degrees) degsum += Integer(d) * d;
  if (degsum != n) throw std::logic_error("character degrees violate sum of squares");
  if (!T.product.empty()) {
    // abelian: <chi_i, chi_j> reduces to the full sum of the character
    // chi_i * conj(chi_j), taken through the product table
    std::vector<int> dual(k, -1);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (T.product[i][j] == 0) dual[i] = j;
    std::vector<CyclotomicNumber> rowsum(k);
    for (int m = 0; m < k; ++m) {
      CyclotomicNumber s;
      for (int l = 0; l < k; ++l) s += T.chars[m][l];
      rowsum[m] = s;
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const CyclotomicNumber& s = rowsum[T.product[i][dual[j]]];
        if (!(s == CyclotomicNumber(Rational(i == j ? n : 0))))
          throw std::logic_error("row orthogonality failed");
      }
    return;
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      CyclotomicNumber s;
      for (int l = 0; l < k; ++l)
        s += CyclotomicNumber(Rational(T.class_sizes[l])) * T.chars[i][l] *
             T.chars[j][l].conjugate();
      if (!(s == CyclotomicNumber(Rational(i == j ? n : 0))))
        throw std::logic_error("row orthogonality failed");
    }
}

}  // namespace

CharacterTable character_table(const FiniteGroup& G) {
  CharacterTable T = G.is_abelian() ? abelian_table(G) : dixon_table(G);
  verify_table(G, T);
  return T;
}

FusionRing rep_fusion_ring(const CharacterTable& T) {
  int k = static_cast<int>(T.chars.size());
  if (!T.product.empty()) {
    // abelian fast path: the character group multiplies by index
    FusionRing F(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        F.N[a][b][T.product[a][b]] = 1;
        if (T.product[a][b] == 0) F.dual[a] = b;
      }
    return F;
  }
  Integer n = 0;
  for (int d : T.degrees) n += Integer(d) * d;
  long order = static_cast<long>(n);
  if (T.modulus != 0) {
    // modular route: every multiplicity is below max_deg^2 < p, so the
    // residue determines it; the result is revalidated downstream
    long p = T.modulus;
    auto mul = [p](long a, long b) { return (a * b) % p; };
    auto pw = [&](long a, long e) {
      long r = 1;
      a %= p;
      while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
      }
      return r;
    };
    long inv_order = pw(order % p, p - 2);
    int max_deg = 0;
    for (int d : T.degrees) max_deg = std::max(max_deg, d);
    if (static_cast<long>(max_deg) * max_deg >= p)
      throw std::logic_error("rep ring: modulus too small");
    FusionRing F(k, std::vector<int>(k, -1));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        bool dualrow = true;
        for (int l = 0; l < k && dualrow; ++l)
          if (T.chars_mod[a][T.inverse_class[l]] != T.chars_mod[b][l]) dualrow = false;
        if (dualrow) F.dual[a] = b;
      }
    for (int a = 0; a < k; ++a)
      if (F.dual[a] < 0) throw std::logic_error("rep ring: missing dual character");
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        std::vector<long> prod(k);
        for (int l = 0; l < k; ++l)
          prod[l] = mul(mul(T.class_sizes[l] % p, T.chars_mod[a][l]), T.chars_mod[b][l]);
        for (int c = 0; c < k; ++c) {
          long s = 0;
          for (int l = 0; l < k; ++l)
            s = (s + mul(prod[l], T.chars_mod[c][T.inverse_class[l]])) % p;
          long val = mul(s, inv_order);
          if (val > static_cast<long>(max_deg) * max_deg)
            throw std::logic_error("rep ring: residue out of range");
          F.N[a][b][c] = static_cast<int>(val);
        }
      }
    return F;
  }
  FusionRing F(k, std::vector<int>(k, -1));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      bool dualrow = true;
      for (int l = 0; l < k; ++l)
        if (!(T.chars[a][l].conjugate() == T.chars[b][l])) {
          dualrow = false;
          break;
        }
      if (dualrow) F.dual[a] = b;
    }
  }
  for (int a = 0; a < k; ++a)
    if (F.dual[a] < 0) throw std::logic_error("rep ring: missing dual character");
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        CyclotomicNumber s;
        for (int l = 0; l < k; ++l)
          s += CyclotomicNumber(Rational(T.class_sizes[l])) * T.chars[a][l] * T.chars[b][l] *
               T.chars[c][l].conjugate();
        Rational q = s.as_rational() / Rational(n);
        if (!is_integral(q) || q < 0) throw std::logic_error("rep ring: bad structure constant");
        F.N[a][b][c] = static_cast<int>(numer(q));
      }
  return F;
}

FusionRing rep_fusion_ring(const FiniteGroup& G) { return rep_fusion_ring(character_table(G)); }

namespace {

std::vector<int> minimal_generating_sequence(const FiniteGroup& G) {
  std::vector<int> gens;
  std::set<int> span{0};
  auto close = [&](std::set<int> s) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(s.begin(), s.end());
      for (int x : cur)
        for (int y : cur)
          if (s.insert(G.mul[x][y]).second) grew = true;
    }
    return s;
  };
  while (static_cast<int>(span.size()) < G.order()) {
    // greedy: the element giving the largest extension
    int best = -1;
    size_t best_size = span.size();
    for (int g = 1; g < G.order(); ++g) {
      if (span.count(g)) continue;
      auto s = span;
      s.insert(g);
      s = close(s);
      if (s.size() > best_size) {
        best_size = s.size();
        best = g;
      }
      if (best_size == static_cast<size_t>(G.order())) break;
    }
    gens.push_back(best);
    auto s = span;
    s.insert(best);
    span = close(s);
  }
  return gens;
}

}  // namespace

std::optional<std::vector<int>> groups_isomorphic(const FiniteGroup& G, const FiniteGroup& H) {
  if (G.order() != H.order()) return std::nullopt;
  int n = G.order();
  {
    std::multiset<int> og(G.elt_order.begin(), G.elt_order.end()),
        oh(H.elt_order.begin(), H.elt_order.end());
    if (og != oh) return std::nullopt;
  }
  std::vector<int> gens = minimal_generating_sequence(G);
  // express every element of G as a word in the generators (BFS)
  std::vector<std::pair<int, int>> parent(n, {-1, -1});  // (prev element, gen index)
  std::vector<int> order_bfs{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (size_t head = 0; head < order_bfs.size(); ++head) {
    int x = order_bfs[head];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int y = G.mul[x][gens[gi]];
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = {x, static_cast<int>(gi)};
        order_bfs.push_back(y);
      }
    }
  }
  std::vector<int> image(n, -1);
  std::optional<std::vector<int>> result;
  std::function<void(size_t)> rec = [&](size_t gi) {
    if (result) return;
    if (gi == gens.size()) {
      // build the full map via the BFS words and verify multiplicativity
      std::vector<int> full(n, -1);
      full[0] = 0;
      for (size_t idx = 1; idx < order_bfs.size(); ++idx) {
        int y = order_bfs[idx];
        auto [px, pg] = parent[y];
        full[y] = H.mul[full[px]][image[gens[pg]]];
      }
      std::vector<bool> hit(n, false);
      for (int x = 0; x < n; ++x) {
        if (full[x] < 0 || hit[full[x]]) return;
        hit[full[x]] = true;
      }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (full[G.mul[x][y]] != H.mul[full[x]][full[y]]) return;
      result = full;
      return;
    }
    int g = gens[gi];
    for (int h = 0; h < n; ++h) {
      if (H.elt_order[h] != G.elt_order[g]) continue;
      image[g] = h;
      rec(gi + 1);
      image[g] = -1;
      if (result) return;
    }
  };
  rec(0);
  return result;
}

SchurFact schur_lookup(const std::string& label) {
  if (label == "1") return {"1", "1", {{1}}};
  if (label == "Z2") return {"Z2", "1", {{1, 1}}};
  if (label == "Z3") return {"Z3", "1", {{1, 1, 1}}};
  if (label == "Z4") return {"Z4", "1", {{1, 1, 1, 1}}};
  if (label == "Z2xZ2") return {"Z2xZ2", "Z2", {{1, 1, 1, 1}, {2}}};
  if (label == "S3") return {"S3", "1", {{1, 1, 2}}};
  throw std::invalid_argument("no curated Schur data for label: " + label);
}

EquivariantizationResult equivariantization_rank(const EquivariantizationPlan& plan) {
  EquivariantizationResult out;
  for (const auto& orb : plan.orbits) {
    if (plan.group_order % orb.orbit_size != 0)
      throw std::invalid_argument("orbit size must divide the group order");
    for (int deg : orb.projective_degrees) {
      CyclotomicNumber dim =
          CyclotomicNumber(Rational(orb.orbit_size)) * orb.base_dim * CyclotomicNumber(Rational(deg));
      if (!is_algebraic_integer(dim))
        out.non_integral.push_back(static_cast<int>(out.dims.size()));
      out.dims.push_back(dim);
      ++out.rank;
    }
  }
  return out;
}

int involution_orbit_count(int n) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("involution orbit count needs odd n");
  return 1 + (n - 1) / 2;
}

}  // namespace premod
