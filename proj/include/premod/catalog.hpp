#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "premod/groups.hpp"

namespace premod {

// one catalog line: order<TAB>name<TAB>degree<TAB>gen1;gen2;...
struct CatalogEntry {
  int order = 0;
  std::string name;
  int degree = 0;
  std::vector<std::string> gens;
};

std::vector<CatalogEntry> parse_catalog(std::istream& in, const std::string& source);
std::vector<CatalogEntry> load_catalog(const std::string& path);

FiniteGroup instantiate(const CatalogEntry& e);

// PREMOD_DATA_DIR when set, otherwise ./data
std::string data_dir();
std::string default_catalog_path();

// catalog groups with exactly k conjugacy classes and order <= max_order,
// deduplicated up to isomorphism
std::vector<FiniteGroup> census(const std::vector<FiniteGroup>& catalog, int k, int max_order);

// convenience: load the bundled catalog and instantiate everything
std::vector<FiniteGroup> bundled_groups(int max_order);

}  // namespace premod
