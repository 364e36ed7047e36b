#include "premod/fusion_ring.hpp"

#include <algorithm>

#include "doctest.h"

using namespace premod;
using C = CyclotomicNumber;

namespace {

void set_sym(FusionRing& F, int a, int b, std::vector<std::pair<int, int>> terms) {
  for (auto [c, m] : terms) {
    F.N[a][b][c] = m;
    F.N[b][a][c] = m;
  }
}

// Rep(D14): 1, sgn, V1, V2, V3
FusionRing rep_d14_ring() {
  FusionRing F(5, {0, 1, 2, 3, 4});
  for (int a = 0; a < 5; ++a)
    for (int c = 0; c < 5; ++c) {
      F.N[0][a][c] = (a == c);
      F.N[a][0][c] = (a == c);
    }
  set_sym(F, 1, 1, {{0, 1}});
  for (int v : {2, 3, 4}) set_sym(F, 1, v, {{v, 1}});
  set_sym(F, 2, 2, {{0, 1}, {1, 1}, {3, 1}});
  set_sym(F, 2, 3, {{2, 1}, {4, 1}});
  set_sym(F, 2, 4, {{3, 1}, {4, 1}});
  set_sym(F, 3, 3, {{0, 1}, {1, 1}, {4, 1}});
  set_sym(F, 3, 4, {{2, 1}, {3, 1}});
  set_sym(F, 4, 4, {{0, 1}, {1, 1}, {2, 1}});
  return F;
}

// Integer-spin part of SU(2) level 8; j = 0..4
FusionRing psu2_8_ring() {
  FusionRing F(5, {0, 1, 2, 3, 4});
  for (int a = 0; a < 5; ++a)
    for (int c = 0; c < 5; ++c) {
      F.N[0][a][c] = (a == c);
      F.N[a][0][c] = (a == c);
    }
  set_sym(F, 1, 1, {{0, 1}, {1, 1}, {2, 1}});
  set_sym(F, 1, 2, {{1, 1}, {2, 1}, {3, 1}});
  set_sym(F, 1, 3, {{2, 1}, {3, 1}, {4, 1}});
  set_sym(F, 1, 4, {{3, 1}});
  set_sym(F, 2, 2, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
  set_sym(F, 2, 3, {{1, 1}, {2, 1}, {3, 1}});
  set_sym(F, 2, 4, {{2, 1}});
  set_sym(F, 3, 3, {{0, 1}, {1, 1}, {2, 1}});
  set_sym(F, 3, 4, {{1, 1}});
  set_sym(F, 4, 4, {{0, 1}});
  return F;
}

// Rep(S3) built from the character table as an independent oracle
FusionRing rep_s3_from_characters() {
  int sizes[3] = {1, 3, 2};
  int chi[3][3] = {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
  FusionRing F(3, {0, 1, 2});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        int num = 0;
        for (int k = 0; k < 3; ++k) num += sizes[k] * chi[a][k] * chi[b][k] * chi[c][k];
        REQUIRE(num % 6 == 0);
        F.N[a][b][c] = num / 6;
      }
  return F;
}

FusionRing rep_s4_ring() {
  // classes (1, 6, 3, 8, 6); rows: triv, sgn, V, std, std'
  int sizes[5] = {1, 6, 3, 8, 6};
  int chi[5][5] = {{1, 1, 1, 1, 1},
                   {1, -1, 1, 1, -1},
                   {2, 0, 2, -1, 0},
                   {3, 1, -1, 0, -1},
                   {3, -1, -1, 0, 1}};
  FusionRing F(5, {0, 1, 2, 3, 4});
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c) {
        int num = 0;
        for (int k = 0; k < 5; ++k) num += sizes[k] * chi[a][k] * chi[b][k] * chi[c][k];
        REQUIRE(num % 24 == 0);
        F.N[a][b][c] = num / 24;
      }
  return F;
}

}  // namespace

TEST_CASE("validate accepts group rings and catches bad tensors") {
  CHECK(validate(make_pointed(cyclic_table(2))).empty());
  CHECK(validate(make_pointed(cyclic_table(4))).empty());
  CHECK(validate(make_pointed(klein_table())).empty());
  CHECK(validate(fib_ring()).empty());
  CHECK(validate(rep_s3_from_characters()).empty());
  CHECK(validate(rep_d14_ring()).empty());
  CHECK(validate(psu2_8_ring()).empty());
  CHECK(validate(rep_s4_ring()).empty());
  CHECK(validate(make_near_group(klein_table(), 0)).empty());   // Rep(D8) skeleton
  CHECK(validate(make_near_group(cyclic_table(4), 2)).empty()); // K(Z4, 2)

  FusionRing bad = make_pointed(cyclic_table(2));
  bad.N[0][1][1] = 2;
  auto v = validate(bad);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().axiom == "unit");

  FusionRing assoc = make_pointed(klein_table());
  assoc.N[1][2][3] = 0;
  assoc.N[1][2][2] = 1;  // break associativity and frobenius
  v = validate(assoc);
  bool saw = false;
  for (const auto& viol : v) saw = saw || viol.axiom == "associativity";
  CHECK(saw);
}

TEST_CASE("fp dimensions, rational spectra") {
  auto d14 = fp_dimensions(rep_d14_ring());
  DimensionVector want{C(1), C(1), C(2), C(2), C(2)};
  CHECK(d14 == want);
  CHECK(fp_dimensions(make_pointed(cyclic_table(1))) == DimensionVector{C(1)});
  auto s4 = fp_dimensions(rep_s4_ring());
  CHECK(s4 == DimensionVector{C(1), C(1), C(2), C(3), C(3)});
}

TEST_CASE("fp dimensions, quadratic spectra") {
  C phi = C::golden_ratio();
  auto psu = fp_dimensions(psu2_8_ring());
  CHECK(psu == DimensionVector{C(1), phi * phi, phi * 2, phi * phi, C(1)});
  auto fib = fp_dimensions(fib_ring());
  CHECK(fib == DimensionVector{C(1), phi});
  auto kz4 = fp_dimensions(make_near_group(cyclic_table(4), 2));
  CHECK(kz4[4] == C(1) + C::sqrt5());
  // near-group over D10's group ring would have degree-2 dims too
  auto ising = fp_dimensions(make_near_group(cyclic_table(2), 0));
  CHECK(ising[2] == C::sqrt2());
}

TEST_CASE("global dimension") {
  DimensionVector a{C(1), C(1), C(2), C(3), C(3)};
  CHECK(global_dimension(a) == C(24));
  CHECK(global_dimension({C(1)}) == C(1));
  DimensionVector b{C(1), C(1), C(2), C(2), C(2)};
  CHECK(global_dimension(b) == C(14));
}

TEST_CASE("subring generation") {
  FusionRing ty = make_near_group(klein_table(), 0);
  auto all = subring_generated_by(ty, 4);
  CHECK(all == std::set<int>{0, 1, 2, 3, 4});
  CHECK(subring_generated_by(ty, 0) == std::set<int>{0});
  FusionRing s3 = rep_s3_from_characters();
  CHECK(subring_generated_by(s3, 1) == std::set<int>{0, 1});
  CHECK(subring_generated_by(s3, 2) == std::set<int>{0, 1, 2});
}

TEST_CASE("universal grading components") {
  auto z4 = universal_grading_components(make_pointed(cyclic_table(4)));
  CHECK(z4.components.size() == 4);
  CHECK(z4.adjoint == std::vector<int>{0});
  for (const auto& t : z4.totals) CHECK(t == C(1));

  auto s3 = universal_grading_components(rep_s3_from_characters());
  CHECK(s3.components.size() == 1);

  auto toric = universal_grading_components(make_pointed(klein_table()));
  CHECK(toric.components.size() == 4);
  for (const auto& t : toric.totals) CHECK(t == C(1));

  // near-group over Klein: Z2 grading with equal totals
  auto ty = universal_grading_components(make_near_group(klein_table(), 0));
  CHECK(ty.components.size() == 2);
  CHECK(ty.totals[0] == ty.totals[1]);
}

TEST_CASE("ring isomorphism") {
  FusionRing z4 = make_pointed(cyclic_table(4));
  FusionRing klein = make_pointed(klein_table());
  CHECK_FALSE(rings_isomorphic(z4, klein).has_value());
  auto self = rings_isomorphic(z4, z4);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<int>{0, 1, 2, 3});
  // Rep(D8) and Rep(Q8) share a Grothendieck ring
  FusionRing d8 = make_near_group(klein_table(), 0);
  FusionRing q8 = relabel(d8, {0, 2, 1, 4, 3});
  CHECK(rings_isomorphic(d8, q8).has_value());
}

TEST_CASE("enumerate: rank 2 with unit dims collapses to the Z2 ring") {
  FusionSearch spec;
  spec.rank = 2;
  spec.dims = {C(1), C(1)};
  spec.dual = {0, 1};
  auto found = enumerate_fusion_rings(spec);
  REQUIRE(found.size() == 1);
  CHECK(found[0] == make_pointed(cyclic_table(2)));
}

TEST_CASE("enumerate: near-group over Klein with a self-dual 2-dim object") {
  FusionSearch spec;
  spec.rank = 5;
  spec.dims = {C(1), C(1), C(2), C(1), C(1)};
  spec.dual = {0, 1, 2, 3, 4};
  // pointed Klein group on {0,1,3,4}
  spec.assignments[{1, 3, 4}] = 1;
  spec.assignments[{3, 4, 1}] = 1;
  spec.assignments[{1, 4, 3}] = 1;
  auto found = enumerate_fusion_rings(spec);
  REQUIRE(found.size() == 1);
  CHECK(rings_isomorphic(found[0], make_near_group(klein_table(), 0)).has_value());
}

TEST_CASE("enumerate: S4-type constraint splits the X3X3 row as in the S3 branch") {
  FusionSearch spec;
  spec.rank = 5;
  spec.dims = {C(1), C(1), C(2), C(3), C(3)};
  spec.dual = {0, 1, 2, 3, 4};
  spec.assignments[{1, 3, 4}] = 1;
  auto found = enumerate_fusion_rings(spec);
  REQUIRE_FALSE(found.empty());
  bool has_rep_s4 = false;
  for (const auto& F : found) {
    // the Diophantine split: N_33^2 = 1 and N_33^3 + N_33^4 = 2
    CHECK(F.n(3, 3, 2) == 1);
    CHECK(F.n(3, 3, 3) + F.n(3, 3, 4) == 2);
    if (rings_isomorphic(F, rep_s4_ring()).has_value()) has_rep_s4 = true;
  }
  CHECK(has_rep_s4);
}

TEST_CASE("enumerate matches the unpruned oracle at small rank") {
  std::vector<FusionSearch> instances;
  {
    FusionSearch s;
    s.rank = 2;
    s.dims = {C(1), C(1)};
    s.dual = {0, 1};
    instances.push_back(s);
    s.dims = {C(1), C(2)};
    instances.push_back(s);
  }
  {
    FusionSearch s;
    s.rank = 3;
    s.dims = {C(1), C(1), C(1)};
    s.dual = {0, 1, 2};
    instances.push_back(s);
    s.dual = {0, 2, 1};
    instances.push_back(s);
    s.dims = {C(1), C(1), C(2)};
    s.dual = {0, 1, 2};
    instances.push_back(s);
    s.dims = {C(1), C(2), C(2)};
    instances.push_back(s);
    s.dual = {0, 2, 1};
    instances.push_back(s);
  }
  for (const auto& s : instances) {
    auto fast = enumerate_fusion_rings(s);
    auto slow = enumerate_fusion_rings_bruteforce(s);
    std::set<FusionRing> a(fast.begin(), fast.end()), b(slow.begin(), slow.end());
    CHECK(a == b);
  }
}

TEST_CASE("enumerated rings satisfy the axioms and the dimension equation") {
  FusionSearch s;
  s.rank = 3;
  s.dims = {C(1), C(1), C(2)};
  s.dual = {0, 1, 2};
  for (const auto& F : enumerate_fusion_rings(s)) {
    CHECK(validate(F).empty());
    auto dims = fp_dimensions(F);
    CHECK(dims == s.dims);
  }
}
