#include "premod/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "premod/cyclotomic.hpp"

namespace premod {

std::vector<CatalogEntry> parse_catalog(std::istream& in, const std::string& source) {
  std::vector<CatalogEntry> out;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error(source + ":" + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    size_t pos = 0;
    while (true) {
      size_t tab = line.find('\t', pos);
      fields.push_back(line.substr(pos, tab == std::string::npos ? tab : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (fields.size() != 4) fail("expected 4 tab-separated fields");
    CatalogEntry e;
    try {
      e.order = std::stoi(fields[0]);
      e.degree = std::stoi(fields[2]);
    } catch (const std::exception&) {
      fail("order and degree must be integers");
    }
    if (e.order < 1 || e.degree < 1) fail("order and degree must be positive");
    e.name = fields[1];
    std::stringstream gens(fields[3]);
    std::string g;
    while (std::getline(gens, g, ';'))
      if (!g.empty()) e.gens.push_back(g);
    if (e.gens.empty()) fail("missing generators");
    for (const auto& s : e.gens) {
      try {
        (void)Permutation::from_cycles(s, e.degree);
      } catch (const std::exception& ex) {
        fail(ex.what());
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog: " + path);
  return parse_catalog(in, path);
}

FiniteGroup instantiate(const CatalogEntry& e) {
  std::vector<Permutation> gens;
  for (const auto& s : e.gens) gens.push_back(Permutation::from_cycles(s, e.degree));
  FiniteGroup G = FiniteGroup::from_generators(e.degree, std::move(gens), e.name);
  if (G.order() != e.order)
    throw std::runtime_error("catalog entry " + e.name + " closes to order " +
                             std::to_string(G.order()) + ", expected " +
                             std::to_string(e.order));
  return G;
}

std::string data_dir() {
  if (const char* env = std::getenv("PREMOD_DATA_DIR")) return env;
  return "data";
}

std::string default_catalog_path() { return data_dir() + "/groups_le60.cat"; }

std::vector<FiniteGroup> bundled_groups(int max_order) {
  std::vector<FiniteGroup> out;
  for (const auto& e : load_catalog(default_catalog_path())) {
    if (e.order > max_order) continue;
    out.push_back(instantiate(e));
  }
  return out;
}

namespace {

// (order, class-size multiset, degree multiset)
std::string fingerprint(const FiniteGroup& G) {
  std::vector<int> sizes;
  for (const auto& c : G.conjugacy_classes()) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  std::vector<int> degs = character_table(G).degrees;
  std::sort(degs.begin(), degs.end());
  std::string f = std::to_string(G.order()) + "|";
  for (int s : sizes) f += std::to_string(s) + ",";
  f += "|";
  for (int d : degs) f += std::to_string(d) + ",";
  return f;
}

}  // namespace

std::vector<FiniteGroup> census(const std::vector<FiniteGroup>& catalog, int k, int max_order) {
  std::vector<FiniteGroup> hits;
  for (const auto& G : catalog) {
    if (G.order() > max_order) continue;
    if (conjugacy_class_count(G) != k) continue;
    hits.push_back(G);
  }
  std::sort(hits.begin(), hits.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.name < b.name;
  });
  std::vector<FiniteGroup> out;
  std::map<std::string, std::vector<size_t>> by_print;
  for (auto& G : hits) {
    std::string f = fingerprint(G);
    bool dup = false;
    for (size_t idx : by_print[f])
      if (groups_isomorphic(out[idx], G)) {
        dup = true;
        break;
      }
    if (!dup) {
      by_print[f].push_back(out.size());
      out.push_back(G);
    }
  }
  return out;
}

}  // namespace premod
