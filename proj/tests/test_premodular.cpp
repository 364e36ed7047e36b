#include "premod/premodular.hpp"

#include <random>

#include "doctest.h"

using namespace premod;
using C = CyclotomicNumber;

namespace {

std::vector<RootOfUnity> ones(int r) { return std::vector<RootOfUnity>(r, RootOfUnity(0, 1)); }

PremodularDatum rep_s4_datum() {
  FusionRing F = rep_fusion_ring(named_group("S4"));
  std::vector<RootOfUnity> T = ones(5);
  T[3] = RootOfUnity(1, 2);
  T[4] = RootOfUnity(1, 2);
  return make_datum(F, fp_dimensions(F), T);
}

PremodularDatum semion_datum() {
  FusionRing F = make_pointed(cyclic_table(2));
  return make_datum(F, fp_dimensions(F), {RootOfUnity(0, 1), RootOfUnity(1, 4)});
}

PremodularDatum toric_datum() {
  FusionRing F = make_pointed(klein_table());
  std::vector<RootOfUnity> T = ones(4);
  T[3] = RootOfUnity(1, 2);  // e, m bosons; f fermion
  return make_datum(F, fp_dimensions(F), T);
}

// synthetic rank-4-center data: center Rep(G) with all twists 1, plus one
// non-transparent object
PremodularDatum synthetic_z4_center() {
  FusionRing F = make_near_group(cyclic_table(4), 2);
  std::vector<RootOfUnity> T = ones(5);
  T[4] = RootOfUnity(2, 5);
  return make_datum(F, fp_dimensions(F), T);
}

PremodularDatum synthetic_d10_center() {
  FusionRing F(5, {0, 1, 2, 3, 4});
  for (int a = 0; a < 5; ++a)
    for (int c = 0; c < 5; ++c) {
      F.N[0][a][c] = (a == c);
      F.N[a][0][c] = (a == c);
    }
  auto sym = [&](int a, int b, std::vector<std::pair<int, int>> terms) {
    for (auto [c, m] : terms) {
      F.N[a][b][c] = m;
      F.N[b][a][c] = m;
    }
  };
  sym(1, 1, {{0, 1}});
  sym(1, 2, {{2, 1}});
  sym(1, 3, {{3, 1}});
  sym(2, 2, {{0, 1}, {1, 1}, {3, 1}});
  sym(2, 3, {{2, 1}, {3, 1}});
  sym(3, 3, {{0, 1}, {1, 1}, {2, 1}});
  sym(1, 4, {{4, 1}});
  sym(2, 4, {{4, 2}});
  sym(3, 4, {{4, 2}});
  sym(4, 4, {{0, 1}, {1, 1}, {2, 2}, {3, 2}});
  REQUIRE(validate(F).empty());
  DimensionVector dims{C(1), C(1), C(2), C(2), C::sqrt_of_integer(Integer(10))};
  std::vector<RootOfUnity> T = ones(5);
  T[4] = RootOfUnity(1, 4);
  return {F, dims, T, s_from_balancing(F, dims, T)};
}

}  // namespace

TEST_CASE("balancing with trivial twists gives the symmetric S") {
  FusionRing F = rep_fusion_ring(named_group("D14"));
  auto dims = fp_dimensions(F);
  auto S = s_from_balancing(F, dims, ones(5));
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) CHECK(S[x][y] == dims[x] * dims[y]);
  PremodularDatum D{F, dims, ones(5), S};
  CHECK(degeneracy_class(D) == DegeneracyClass::symmetric);
  CHECK(muger_center(D).indices.size() == 5);
}

TEST_CASE("Rep(S4) datum: S rows, center, class") {
  auto D = rep_s4_datum();
  CHECK(check_balancing(D).empty());
  // transparent rows carry the product pattern
  for (int x : {0, 1, 2})
    for (int y = 0; y < 5; ++y) CHECK(D.S[x][y] == D.dims[x] * D.dims[y]);
  // the other rows are orthogonal to the first column
  for (int x : {3, 4}) {
    C dot;
    for (int k = 0; k < 5; ++k) dot += D.S[k][x] * D.dims[k];
    CHECK(dot.is_zero());
  }
  auto center = muger_center(D);
  CHECK(center.indices == std::vector<int>{0, 1, 2});
  CHECK(center.tannakian);
  REQUIRE(center.group_label.has_value());
  CHECK(*center.group_label == "S3");
  CHECK(degeneracy_class(D) == DegeneracyClass::properly_premodular);
  CHECK(check_datum(D).empty());
}

TEST_CASE("semion and toric code data") {
  auto sem = semion_datum();
  CHECK(check_balancing(sem).empty());
  CHECK(muger_center(sem).indices == std::vector<int>{0});
  CHECK(degeneracy_class(sem) == DegeneracyClass::modular);
  CHECK(column_orthogonality_residual(sem, 0, 1).is_zero());

  auto toric = toric_datum();
  CHECK(check_balancing(toric).empty());
  SMatrix want{{C(1), C(1), C(1), C(1)},
               {C(1), C(1), C(-1), C(-1)},
               {C(1), C(-1), C(1), C(-1)},
               {C(1), C(-1), C(-1), C(1)}};
  CHECK(toric.S == want);
  CHECK(degeneracy_class(toric) == DegeneracyClass::modular);
}

TEST_CASE("balancing violations are reported") {
  auto D = rep_s4_datum();
  CHECK(check_balancing(D).empty());  // round trip by construction
  auto broken = D;
  broken.twists[3] = RootOfUnity(0, 1);  // flip a twist, keep S
  auto v = check_balancing(broken);
  CHECK_FALSE(v.empty());
  bool at33 = false;
  for (const auto& bv : v) at33 = at33 || (bv.x == 3 && bv.y == 3);
  CHECK(at33);

  FusionRing triv = make_pointed(cyclic_table(1));
  PremodularDatum rank1 = make_datum(triv, {C(1)}, ones(1));
  CHECK(check_balancing(rank1).empty());
}

TEST_CASE("column orthogonality residuals") {
  // fully symmetric datum: columns are all parallel
  FusionRing F = rep_fusion_ring(named_group("S3"));
  auto dims = fp_dimensions(F);
  PremodularDatum sym{F, dims, ones(3), s_from_balancing(F, dims, ones(3))};
  C want = dims[1] * global_dimension(dims);
  CHECK(column_orthogonality_residual(sym, 0, 1) == want);
  CHECK_FALSE(column_orthogonality_residual(sym, 0, 1).is_zero());

  auto s4 = rep_s4_datum();
  CHECK(column_orthogonality_residual(s4, 0, 3).is_zero());
}

TEST_CASE("last entry lemma, formula and theorem-test on synthetic data") {
  CHECK(last_entry_value(5, C(4)) == C(-4));
  CHECK(last_entry_value(2, C(1)) == C(-1));
  CHECK(last_entry_value(5, C(10)) == C(-10));

  auto z4 = synthetic_z4_center();
  CHECK(check_balancing(z4).empty());
  CHECK(muger_center(z4).indices == std::vector<int>{0, 1, 2, 3});
  CHECK(z4.S[4][4] == C(-4));
  CHECK(z4.S[4][4] == last_entry_value(5, global_dimension({z4.dims.begin(), z4.dims.end() - 1})));
  CHECK(z4.dims[4] == C(1) + C::sqrt5());

  auto d10 = synthetic_d10_center();
  CHECK(check_balancing(d10).empty());
  CHECK(muger_center(d10).indices == std::vector<int>{0, 1, 2, 3});
  CHECK(d10.S[4][4] == C(-10));
  auto label = muger_center(d10).group_label;
  REQUIRE(label.has_value());
  CHECK(*label == "D10");
}

TEST_CASE("theta condition: near-group branch with one unknown twist") {
  // index order (1, z, V, g, zg): dims (1,1,2,1,1), twists (1,1,?, -1,-1)
  FusionRing ty = relabel(make_near_group(klein_table(), 0), {0, 1, 3, 4, 2});
  DimensionVector dims{C(1), C(1), C(2), C(1), C(1)};
  CHECK(fp_dimensions(ty) == dims);
  std::vector<std::optional<RootOfUnity>> T(5);
  T[0] = RootOfUnity(0, 1);
  T[1] = RootOfUnity(0, 1);
  T[3] = RootOfUnity(1, 2);
  T[4] = RootOfUnity(1, 2);
  auto cond = theta_condition_residual(ty, dims, T, 2);
  CHECK(cond.residual_zero);
  CHECK(cond.residual.is_zero());
  REQUIRE(cond.family.size() == 5);
  for (const auto& [m, q] : cond.family) {
    (void)m;
    CHECK(q.degree() == 4);
    CHECK(q.lead() == 1);
  }
  std::set<long> orders;
  for (const auto& r : cond.admissible) orders.insert(r.order());
  CHECK(orders == std::set<long>{1, 2, 3, 4, 6, 8, 12});
  // orders 5 and 10 are exactly the phi(n) <= 4 cases excluded
  CHECK(cond.admissible_annihilator.degree() == 16);
  CHECK(cond.admissible_annihilator.lead() == 1);
}

TEST_CASE("theta condition: concrete membership checks") {
  auto toric = toric_datum();
  for (int x = 0; x < 4; ++x) {
    auto m = theta_condition_value(toric, x);
    CHECK(m.rhs_integral);
  }
  FusionRing triv = make_pointed(cyclic_table(1));
  PremodularDatum rank1 = make_datum(triv, {C(1)}, ones(1));
  auto m = theta_condition_value(rank1, 0);
  CHECK(m.lhs == C(2));
  CHECK(m.rhs_integral);
}

TEST_CASE("root of unity solutions") {
  IntPolynomial contradiction({Integer(1), Integer(5), Integer(1)});
  CHECK(root_of_unity_solutions(contradiction).empty());
  IntPolynomial square({Integer(-1), Integer(0), Integer(1)});
  auto pm1 = root_of_unity_solutions(square);
  CHECK(pm1 == std::vector<RootOfUnity>{RootOfUnity(0, 1), RootOfUnity(1, 2)});
  IntPolynomial phi3({Integer(1), Integer(1), Integer(1)});
  auto thirds = root_of_unity_solutions(phi3);
  CHECK(thirds == std::vector<RootOfUnity>{RootOfUnity(1, 3), RootOfUnity(2, 3)});
}

TEST_CASE("balancing round-trip holds for random twist assignments") {
  std::vector<FusionRing> pool{
      make_pointed(cyclic_table(2)),  make_pointed(cyclic_table(3)),
      make_pointed(cyclic_table(4)),  make_pointed(klein_table()),
      make_pointed(cyclic_table(5)),  fib_ring(),
      make_near_group(cyclic_table(2), 0), make_near_group(klein_table(), 0),
      make_near_group(cyclic_table(4), 2), rep_fusion_ring(named_group("S3")),
      rep_fusion_ring(named_group("D14")), rep_fusion_ring(named_group("S4"))};
  std::mt19937 rng(20260809);
  std::uniform_int_distribution<int> order_pick(1, 12);
  int trials = 0;
  for (int it = 0; it < 40; ++it) {
    const FusionRing& F = pool[it % pool.size()];
    auto dims = fp_dimensions(F);
    std::vector<RootOfUnity> T(F.rank, RootOfUnity(0, 1));
    for (int i = 1; i < F.rank; ++i) {
      int n = order_pick(rng);
      std::uniform_int_distribution<int> k_pick(0, n - 1);
      T[i] = RootOfUnity(k_pick(rng), n);
    }
    auto D = make_datum(F, dims, T);
    CHECK(check_balancing(D).empty());
    ++trials;
  }
  CHECK(trials == 40);
}

TEST_CASE("muger center is fusion- and dual-closed") {
  for (auto D : {rep_s4_datum(), toric_datum(), synthetic_z4_center()}) {
    auto center = muger_center(D);
    std::set<int> idx(center.indices.begin(), center.indices.end());
    CHECK(idx.count(0) == 1);
    for (int x : center.indices) {
      CHECK(idx.count(D.ring.dual[x]) == 1);
      for (int y : center.indices)
        for (int c = 0; c < D.ring.rank; ++c)
          if (D.ring.n(x, y, c) > 0) CHECK(idx.count(c) == 1);
    }
  }
}
