// Generates the bundled small-groups catalog (orders 1..60).
//
// Every group of order < 60 is solvable, and A5 is the only nonsolvable
// group of order 60, so iterated extensions N.Z_p with N normal of prime
// index reach everything: for each order n, each prime p | n and each
// already-known N of order n/p, enumerate pairs (alpha, z) with
// alpha in Aut(N), alpha(z) = z, alpha^p = conj_z, build the extension
// <N, t | t x t^-1 = alpha(x), t^p = z>, and deduplicate up to isomorphism.
//
// The per-order counts are checked against the classical table of the
// numbers of groups of each order before anything is written.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>

#include "premod/catalog.hpp"
#include "premod/groups.hpp"

using namespace premod;

namespace {

using Table = std::vector<std::vector<int>>;  // Cayley table, identity = 0

Table table_of(const FiniteGroup& G) { return G.mul; }

FiniteGroup group_from_table(const Table& t, const std::string& name) {
  int n = static_cast<int>(t.size());
  // regular representation on a greedy generating set
  std::set<int> span{0};
  std::vector<int> gens;
  auto close = [&](std::set<int> s) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(s.begin(), s.end());
      for (int x : cur)
        for (int y : cur)
          if (s.insert(t[x][y]).second) grew = true;
    }
    return s;
  };
  while (static_cast<int>(span.size()) < n) {
    int pick = -1;
    for (int g = 1; g < n; ++g)
      if (!span.count(g)) {
        pick = g;
        break;
      }
    gens.push_back(pick);
    auto s = span;
    s.insert(pick);
    span = close(s);
  }
  std::vector<Permutation> perms;
  for (int g : gens) {
    Permutation p;
    p.img.resize(n);
    for (int x = 0; x < n; ++x) p.img[x] = t[x][g];
    perms.push_back(p);
  }
  return FiniteGroup::from_generators(n, perms, name);
}

// all automorphisms of G as element-index maps
std::vector<std::vector<int>> automorphisms(const FiniteGroup& G) {
  int n = G.order();
  std::set<int> span{0};
  std::vector<int> gens;
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
  while (static_cast<int>(span.size()) < n) {
    int best = -1;
    size_t best_size = span.size();
    for (int g = 1; g < n; ++g) {
      if (span.count(g)) continue;
      auto s = span;
      s.insert(g);
      s = close(s);
      if (s.size() > best_size) {
        best_size = s.size();
        best = g;
      }
      if (best_size == static_cast<size_t>(n)) break;
    }
    gens.push_back(best);
    auto s = span;
    s.insert(best);
    span = close(s);
  }
  // BFS words for every element
  std::vector<std::pair<int, int>> parent(n, {-1, -1});
  std::vector<int> bfs{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (size_t head = 0; head < bfs.size(); ++head)
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int y = G.mul[bfs[head]][gens[gi]];
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = {bfs[head], static_cast<int>(gi)};
        bfs.push_back(y);
      }
    }
  std::vector<std::vector<int>> result;
  std::vector<int> image(gens.size(), -1);
  std::function<void(size_t)> rec = [&](size_t gi) {
    if (gi == gens.size()) {
      std::vector<int> full(n, -1);
      full[0] = 0;
      for (size_t idx = 1; idx < bfs.size(); ++idx) {
        int y = bfs[idx];
        auto [px, pg] = parent[y];
        full[y] = G.mul[full[px]][image[pg]];
      }
      std::vector<bool> hit(n, false);
      for (int x = 0; x < n; ++x) {
        if (hit[full[x]]) return;
        hit[full[x]] = true;
      }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (full[G.mul[x][y]] != G.mul[full[x]][full[y]]) return;
      result.push_back(full);
      return;
    }
    for (int h = 0; h < n; ++h) {
      if (G.elt_order[h] != G.elt_order[gens[gi]]) continue;
      image[gi] = h;
      rec(gi + 1);
    }
  };
  rec(0);
  return result;
}

std::vector<int> compose_map(const std::vector<int>& f, const std::vector<int>& g) {
  // x -> g(f(x))
  std::vector<int> r(f.size());
  for (size_t x = 0; x < f.size(); ++x) r[x] = g[f[x]];
  return r;
}

std::vector<int> invert_map(const std::vector<int>& f) {
  std::vector<int> r(f.size());
  for (size_t x = 0; x < f.size(); ++x) r[f[x]] = static_cast<int>(x);
  return r;
}

// representatives of Aut(N)-conjugacy classes
std::vector<std::vector<int>> aut_class_reps(const std::vector<std::vector<int>>& aut) {
  std::map<std::vector<int>, bool> visited;
  std::vector<std::vector<int>> reps;
  for (const auto& a : aut) visited[a] = false;
  for (const auto& a : aut) {
    if (visited[a]) continue;
    reps.push_back(a);
    for (const auto& g : aut) {
      auto conj = compose_map(compose_map(invert_map(g), a), g);
      visited[conj] = true;
    }
  }
  return reps;
}

std::string cheap_fingerprint(const FiniteGroup& G) {
  std::vector<int> orders = G.elt_order;
  std::sort(orders.begin(), orders.end());
  std::vector<int> classes;
  for (const auto& c : G.conjugacy_classes()) classes.push_back(static_cast<int>(c.size()));
  std::sort(classes.begin(), classes.end());
  int center = 0;
  for (int a = 0; a < G.order(); ++a) {
    bool central = true;
    for (int b = 0; b < G.order() && central; ++b)
      if (G.mul[a][b] != G.mul[b][a]) central = false;
    if (central) ++center;
  }
  std::string f;
  for (int o : orders) f += std::to_string(o) + ".";
  f += "|";
  for (int c : classes) f += std::to_string(c) + ".";
  f += "|z" + std::to_string(center);
  return f;
}

const int kKnownCounts[61] = {
    0,  1, 1, 1, 2, 1, 2, 1, 5,  2, 2,  1, 5, 1, 2, 1, 14, 1, 5, 1, 5,
    2,  2, 1, 15, 2, 2, 5, 4, 1,  4, 1,  51, 1, 2, 1, 14, 1, 2, 2, 14,
    1,  6, 1, 4, 2, 2, 1, 52, 2, 5, 1,  5, 1, 15, 2, 13, 2, 2, 1, 13};

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "data/groups_le60.cat";
  std::map<int, std::vector<FiniteGroup>> groups;
  groups[1].push_back(group_from_table(Table{{0}}, "1"));

  std::map<int, std::vector<std::vector<int>>> aut_cache_by_id;
  for (int n = 2; n <= 60; ++n) {
    std::vector<FiniteGroup> found;
    std::map<std::string, std::vector<size_t>> by_print;
    auto consider = [&](const Table& t) {
      FiniteGroup G = group_from_table(t, "");
      std::string f = cheap_fingerprint(G);
      for (size_t idx : by_print[f])
        if (groups_isomorphic(found[idx], G)) return;
      by_print[f].push_back(found.size());
      found.push_back(std::move(G));
    };
    for (int p = 2; p <= n; ++p) {
      if (n % p != 0) continue;
      bool prime = true;
      for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      if (!prime) continue;
      int m = n / p;
      for (size_t ni = 0; ni < groups[m].size(); ++ni) {
        const FiniteGroup& N = groups[m][ni];
        auto auts = automorphisms(N);
        auto reps = aut_class_reps(auts);
        for (const auto& alpha : reps) {
          // alpha^p
          std::vector<int> ap(N.order());
          std::iota(ap.begin(), ap.end(), 0);
          for (int i = 0; i < p; ++i) ap = compose_map(ap, alpha);
          for (int z = 0; z < N.order(); ++z) {
            if (alpha[z] != z) continue;
            bool match = true;
            for (int x = 0; x < N.order() && match; ++x)
              if (ap[x] != N.mul[N.mul[z][x]][N.inv[z]]) match = false;
            if (!match) continue;
            // build the extension table
            int order = N.order() * p;
            Table t(order, std::vector<int>(order));
            // powers of alpha
            std::vector<std::vector<int>> apow(p, std::vector<int>(N.order()));
            std::iota(apow[0].begin(), apow[0].end(), 0);
            for (int i = 1; i < p; ++i) apow[i] = compose_map(apow[i - 1], alpha);
            for (int i = 0; i < p; ++i)
              for (int x = 0; x < N.order(); ++x)
                for (int j = 0; j < p; ++j)
                  for (int y = 0; y < N.order(); ++y) {
                    int xy = N.mul[x][apow[i][y]];
                    int ij = i + j;
                    if (ij >= p) {
                      xy = N.mul[xy][z];
                      ij -= p;
                    }
                    t[x + i * N.order()][y + j * N.order()] = xy + ij * N.order();
                  }
            consider(t);
          }
        }
      }
    }
    if (n == 60) {
      // the one nonsolvable group
      consider(table_of(named_group("A5")));
    }
    groups[n] = std::move(found);
    if (static_cast<int>(groups[n].size()) != kKnownCounts[n]) {
      std::cerr << "order " << n << ": generated " << groups[n].size() << " groups, expected "
                << kKnownCounts[n] << "\n";
      return 1;
    }
    std::cerr << "order " << n << ": " << groups[n].size() << " groups\n";
  }

  // attach the classical names where the group matches a named one
  const char* named[] = {"Z2",  "Z3", "Z4",  "Z2xZ2", "Z5",    "S3",    "D8",   "Q8",
                         "D10", "D14", "A4", "S4",    "A5",    "Z5:Z4", "Z7:Z3"};
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  int total = 0;
  for (int n = 1; n <= 60; ++n) {
    int idx = 0;
    for (auto& G : groups[n]) {
      ++idx;
      std::string name = "o" + std::to_string(n) + "_g" + std::to_string(idx);
      int degree = G.degree;
      std::vector<std::string> gens;
      for (const auto& g : G.generators) gens.push_back(g.cycle_string());
      if (n == 1) {
        name = "1";
        degree = 1;
        gens = {"()"};
      }
      for (const char* cand : named) {
        FiniteGroup H = named_group(cand);
        if (H.order() == n && groups_isomorphic(G, H)) {
          name = cand;
          degree = H.degree;
          gens.clear();
          for (const auto& g : H.generators) gens.push_back(g.cycle_string());
          break;
        }
      }
      out << n << "\t" << name << "\t" << degree << "\t";
      for (size_t i = 0; i < gens.size(); ++i) out << (i ? ";" : "") << gens[i];
      out << "\n";
      ++total;
    }
  }
  std::cerr << "wrote " << total << " groups to " << out_path << "\n";
  return 0;
}
