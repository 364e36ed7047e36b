#pragma once

#include <optional>
#include <string>
#include <vector>

#include "premod/fusion_ring.hpp"

namespace premod {

struct Permutation {
  std::vector<int> img;  // 0-based images

  static Permutation identity(int degree);
  static Permutation from_cycles(const std::string& text, int degree);  // "(1,2)(3,4)"

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x]; }
  Permutation compose(const Permutation& then) const;  // this first, then `then`
  Permutation inverse() const;
  bool is_identity() const;
  std::string cycle_string() const;  // 1-based

  bool operator==(const Permutation& o) const { return img == o.img; }
  bool operator<(const Permutation& o) const { return img < o.img; }
};

struct FiniteGroup {
  int degree = 0;
  std::string name;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;     // BFS order, identity first
  std::vector<std::vector<int>> mul;     // index table
  std::vector<int> inv;
  std::vector<int> elt_order;

  static FiniteGroup from_generators(int degree, std::vector<Permutation> gens,
                                     std::string name = "", int max_order = 10000);

  int order() const { return static_cast<int>(elements.size()); }
  bool is_abelian() const;
  int exponent() const;

  // classes sorted canonically: identity class first, then by
  // (element order, class size, smallest member index)
  const std::vector<std::vector<int>>& conjugacy_classes() const;

 private:
  mutable std::vector<std::vector<int>> classes_;
};

FiniteGroup named_group(const std::string& label);

int conjugacy_class_count(const FiniteGroup& G);

struct CharacterTable {
  std::vector<int> class_sizes;
  std::vector<int> class_reps;    // element indices into G.elements
  std::vector<int> class_orders;  // element orders per class
  std::vector<std::vector<CyclotomicNumber>> chars;  // chars[i][class]
  std::vector<int> degrees;       // chars[i][0], ascending, trivial row first
  // abelian only: product[i][j] = index of the character chars[i] * chars[j]
  std::vector<std::vector<int>> product;
  std::vector<int> inverse_class;  // class index of the inverses
  // modular image from the Dixon computation (nonabelian tables); structure
  // constants are bounded by max degree squared < modulus, so the exact
  // fusion ring can be read off the residues
  long modulus = 0;
  std::vector<std::vector<long>> chars_mod;
};

// Exact table; abelian groups via the dual group, the rest via Dixon's
// modular method with exact cyclotomic lift.
CharacterTable character_table(const FiniteGroup& G);

FusionRing rep_fusion_ring(const FiniteGroup& G);
FusionRing rep_fusion_ring(const CharacterTable& T);

std::optional<std::vector<int>> groups_isomorphic(const FiniteGroup& G, const FiniteGroup& H);

struct SchurFact {
  std::string group;
  std::string multiplier;  // "1" or "Z2"
  // projective irrep degrees per cocycle class; index 0 = trivial class
  std::vector<std::vector<int>> degrees_per_class;
};

// curated table for the stabilizers that actually occur
SchurFact schur_lookup(const std::string& label);

struct EquivariantizationOrbit {
  int orbit_size = 1;
  std::string stabilizer;             // label into schur_lookup
  int cocycle_class = 0;
  std::vector<int> projective_degrees;
  CyclotomicNumber base_dim = CyclotomicNumber(1);
};

struct EquivariantizationPlan {
  int group_order = 1;
  std::vector<EquivariantizationOrbit> orbits;
};

struct EquivariantizationResult {
  int rank = 0;
  DimensionVector dims;
  std::vector<int> non_integral;  // indices of dims failing algebraic integrality
};

EquivariantizationResult equivariantization_rank(const EquivariantizationPlan& plan);

// orbits of x -> -x on Z_n, n odd
int involution_orbit_count(int n);

}  // namespace premod
