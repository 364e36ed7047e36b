#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "premod/cyclotomic.hpp"

namespace premod {

using DimensionVector = std::vector<CyclotomicNumber>;

// Grothendieck skeleton: rank, fusion tensor N[a][b][c] = N_{a,b}^c, duality.
struct FusionRing {
  int rank = 0;
  std::vector<int> dual;
  std::vector<std::vector<std::vector<int>>> N;

  FusionRing() = default;
  FusionRing(int r, std::vector<int> d);

  int n(int a, int b, int c) const { return N[a][b][c]; }
  void set(int a, int b, int c, int v) { N[a][b][c] = v; }

  bool operator==(const FusionRing& o) const {
    return rank == o.rank && dual == o.dual && N == o.N;
  }
  bool operator<(const FusionRing& o) const;
};

struct Violation {
  std::string axiom;
  std::vector<int> where;
  std::string str() const;
};

std::vector<Violation> validate(const FusionRing& F);

// Exact FP dimensions: the common Perron eigenvector of the fusion matrices,
// realized in a cyclotomic field. Supported exactly for spectra of degree
// <= 2 over Q (covers every ring in scope); otherwise reports failure.
DimensionVector fp_dimensions(const FusionRing& F, int conductor_bound = 120);

CyclotomicNumber global_dimension(const DimensionVector& dims);

std::set<int> subring_generated_by(const FusionRing& F, int a);

struct GradingDecomposition {
  std::vector<int> adjoint;                   // support of the adjoint subring
  std::vector<std::vector<int>> components;   // partition of 0..rank-1
  std::vector<CyclotomicNumber> totals;       // per-component sums of squared dims
};
GradingDecomposition universal_grading_components(const FusionRing& F);

struct FusionSearch {
  int rank = 0;
  DimensionVector dims;                      // dims[0] = 1, FP-positive values
  std::vector<int> dual;                     // required involution
  std::map<std::array<int, 3>, int> assignments;  // partial constraints
  long node_budget = 4000000;
};

struct SearchSpaceExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All fusion tensors compatible with the axioms, the dimension equation and
// the given constraints, deduplicated up to relabelings fixing the unit.
std::vector<FusionRing> enumerate_fusion_rings(const FusionSearch& spec);

// brute-force reference enumerator, no search pruning; small ranks only
std::vector<FusionRing> enumerate_fusion_rings_bruteforce(const FusionSearch& spec);

std::optional<std::vector<int>> rings_isomorphic(const FusionRing& F, const FusionRing& G);

FusionRing relabel(const FusionRing& F, const std::vector<int>& perm);
FusionRing canonical_form(const FusionRing& F);

// builders used across tests and the classification
FusionRing make_pointed(const std::vector<std::vector<int>>& cayley);
// pointed part given by a group table plus one extra object X with
// g (x) X = X and X (x) X = sum_g g + t X
FusionRing make_near_group(const std::vector<std::vector<int>>& cayley, int t);
FusionRing fib_ring();
std::vector<std::vector<int>> cyclic_table(int n);
std::vector<std::vector<int>> klein_table();

}  // namespace premod
