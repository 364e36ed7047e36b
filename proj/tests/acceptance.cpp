// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "premod/arith.hpp"
#include "premod/classify.hpp"

using namespace premod;
using C = CyclotomicNumber;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what
            << std::endl;
  if (!ok) ++failures;
}

const CaseNode* find_node(const CaseNode& node, const std::string& label) {
  if (node.label == label) return &node;
  for (const auto& c : node.children)
    if (const CaseNode* hit = find_node(c, label)) return hit;
  return nullptr;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

// 1. the census reproduces the eight groups within the runtime budget
void criterion1(const std::vector<FiniteGroup>& catalog) {
  auto t0 = Clock::now();
  auto five = census(catalog, 5, 60);
  double dt = seconds_since(t0);
  std::vector<std::string> names;
  for (const auto& G : five) names.push_back(G.name);
  bool ok = names == std::vector<std::string>{"Z5", "D8", "Q8",    "D14",
                                              "Z5:Z4", "Z7:Z3", "S4", "A5"} &&
            dt < 60.0 && sylvester_landau_bound(5) == 1806;
  std::ostringstream msg;
  msg << "census(5, 60) lists the eight groups in " << dt
      << " s; sylvester_landau_bound(5) = " << sylvester_landau_bound(5).str();
  report(1, ok, msg.str());
}

// 2. balancing round-trip on >= 100 random twist assignments at rank <= 5
void criterion2() {
  std::vector<FusionRing> pool{
      make_pointed(cyclic_table(2)),       make_pointed(cyclic_table(3)),
      make_pointed(cyclic_table(4)),       make_pointed(klein_table()),
      make_pointed(cyclic_table(5)),       fib_ring(),
      make_near_group(cyclic_table(2), 0), make_near_group(klein_table(), 0),
      make_near_group(cyclic_table(4), 2), rep_fusion_ring(named_group("S3")),
      rep_fusion_ring(named_group("D10")), rep_fusion_ring(named_group("A4")),
      rep_fusion_ring(named_group("D14")), rep_fusion_ring(named_group("S4"))};
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> order_pick(1, 12);
  int trials = 0, good = 0;
  for (int it = 0; it < 112; ++it) {
    const FusionRing& F = pool[it % pool.size()];
    auto dims = fp_dimensions(F);
    std::vector<RootOfUnity> T(F.rank, RootOfUnity(0, 1));
    for (int i = 1; i < F.rank; ++i) {
      int n = order_pick(rng);
      std::uniform_int_distribution<int> k_pick(0, n - 1);
      T[i] = RootOfUnity(k_pick(rng), n);
    }
    ++trials;
    if (check_balancing(make_datum(F, dims, T)).empty()) ++good;
  }
  std::ostringstream msg;
  msg << good << "/" << trials << " random (ring, twists) pairs pass check_balancing exactly";
  report(2, trials >= 100 && good == trials, msg.str());
}

// 3. the last-entry lemma as a theorem-test on the synthetic branch data
void criterion3() {
  bool ok = true;
  std::string detail;
  for (const char* label : {"Z4", "Z2xZ2", "D10", "A4"}) {
    auto D = synthetic_rank4_center_datum(label);
    C center_dim = global_dimension({D.dims.begin(), D.dims.end() - 1});
    bool this_ok = check_balancing(D).empty() &&
                   muger_center(D).indices == std::vector<int>{0, 1, 2, 3} &&
                   D.S[4][4] == last_entry_value(5, center_dim);
    if (std::string(label) == "Z4" || std::string(label) == "Z2xZ2")
      this_ok = this_ok && D.S[4][4] == C(-4);
    if (!this_ok) ok = false;
    detail += std::string(label) + ": S44 = " + D.S[4][4].str() + "; ";
  }
  // no bundled properly premodular datum has a rank-4 center, so the
  // synthetic branch data carry the whole check
  for (const auto& entry : bundled_properly_premodular()) {
    auto center = muger_center(entry.datum);
    if (static_cast<int>(center.indices.size()) == entry.datum.ring.rank - 1) {
      C cd = C(0);
      for (int x : center.indices) cd += entry.datum.dims[x] * entry.datum.dims[x];
      int r = entry.datum.ring.rank;
      if (!(entry.datum.S[r - 1][r - 1] == last_entry_value(r, cd))) ok = false;
    }
  }
  report(3, ok, "rank-4-center synthetic data satisfy S[4][4] = -dim C' (" + detail + ")");
}

// 4. twist-filter case tables and their re-verified eliminations
void criterion4() {
  auto z4 = rank4_twist_filter("Z4");
  auto klein = rank4_twist_filter("Z2xZ2");
  auto d10 = rank4_twist_filter("D10");
  auto a4 = rank4_twist_filter("A4");
  bool tables = z4.surviving_orders == std::vector<int>{10} &&
                z4.survivor_dimension == C(1) + C::sqrt5() &&
                klein.surviving_orders == std::vector<int>{10} &&
                klein.survivor_dimension == C(1) + C::sqrt5() &&
                d10.surviving_orders == std::vector<int>{4, 12} &&
                d10.survivor_dimension == C(3) && d10.total_dimension == C(19) &&
                a4.surviving_orders == std::vector<int>{4, 12} &&
                a4.survivor_dimension == C(2) * C::sqrt3();
  bool eliminations = !is_algebraic_integer((C(1) + C::sqrt5()) / C(4)) &&
                      !is_algebraic_integer(C(2) / C::sqrt3()) &&
                      !divisibility_check(C(10), C(19));
  report(4, tables && eliminations,
         "surviving orders {10}/{10}/{4,12}/{4,12} with d = 1+sqrt5, 1+sqrt5, 3, 2*sqrt3; "
         "witnesses (1+sqrt5)/4, 2/sqrt3 non-integral and 10 does not divide 19");
}

// 5. the Z3-branch orthogonality polynomial and its empty solution set
void criterion5(const std::vector<FiniteGroup>& catalog) {
  CaseNode node = classify_center_rank3(catalog);
  const CaseNode* z3 = find_node(node, "center = Rep(Z3)");
  bool ok = z3 && z3->outcome == "ELIMINATED";
  IntPolynomial expected({Integer(1), Integer(5), Integer(1)});
  if (ok) {
    IntPolynomial got = poly_from_json(z3->witness.at("polynomial"));
    ok = got == expected && root_of_unity_solutions(got).empty() && verify_witness(z3->witness);
  }
  report(5, ok, "generated polynomial is theta^2 + 5 theta + 1 with no root-of-unity roots");
}

// 6. the Diophantine split with the max-norm prune
void criterion6() {
  auto split = x3_row_diophantine(2, 3);
  bool ok = split.kept == std::vector<std::array<int, 2>>{{1, 2}} &&
            split.pruned == std::vector<std::array<int, 2>>{{4, 0}} && split.bound == 3;
  report(6, ok, "9 = 1 + 2 N2 + 3 N34 solves as {N2 = 1, N34 = 2}; {N2 = 4} pruned by the "
                "norm bound 3");
}

// 7. the final report: counts, T-matrices, byte stability, golden match, runtime
void criterion7(const std::vector<FiniteGroup>& catalog) {
  auto t0 = Clock::now();
  auto report1 = classify_rank5(catalog);
  auto report2 = classify_rank5(catalog);
  double dt = seconds_since(t0);
  std::string bytes1 = canonical_dump(report_to_json(report1));
  std::string bytes2 = canonical_dump(report_to_json(report2));
  bool counts = report1.summary.at("symmetric") == 8 &&
                report1.summary.at("properly_premodular") == 4 &&
                report1.summary.at("modular") == 4;
  const CaseNode* s4 = find_node(report1.root.children[1], "case 1: y = z (stabilizer Z2, "
                                                           "rank-4 pointed modularization)");
  bool tmatrix = s4 && s4->datum &&
                 s4->datum->twists == std::vector<RootOfUnity>{RootOfUnity(0, 1),
                                                               RootOfUnity(0, 1),
                                                               RootOfUnity(0, 1),
                                                               RootOfUnity(1, 2),
                                                               RootOfUnity(1, 2)};
  std::ifstream golden_file(data_dir() + "/golden_report.json", std::ios::binary);
  std::stringstream golden;
  golden << golden_file.rdbuf();
  bool ok = counts && tmatrix && bytes1 == bytes2 && bytes1 == golden.str() && dt < 300.0;
  std::ostringstream msg;
  msg << "summary (8, 4, 4); Rep(S4) branch T = diag(1,1,1,-1,-1); two runs byte-identical "
      << "and equal to the golden report; " << dt << " s for both runs";
  report(7, ok, msg.str());
}

// 8. the theta-condition polynomial on the Rep(D8) branch
void criterion8() {
  FusionRing d8 = rep_d8_branch_datum().ring;
  DimensionVector dims = fp_dimensions(d8);
  std::vector<std::optional<RootOfUnity>> partial(5);
  partial[0] = RootOfUnity(0, 1);
  partial[1] = RootOfUnity(0, 1);
  partial[3] = RootOfUnity(1, 2);
  partial[4] = RootOfUnity(1, 2);
  auto cond = theta_condition_residual(d8, dims, partial, 2);
  bool family_ok = cond.family.size() == 5;
  for (const auto& [m, q] : cond.family) {
    (void)m;
    if (q.degree() != 4 || !(q.lead() == 1)) family_ok = false;
  }
  std::set<long> orders;
  for (const auto& r : cond.admissible) orders.insert(r.order());
  bool admissible_ok = orders == std::set<long>{1, 2, 3, 4, 6, 8, 12};
  // the golden report records the computed degree
  std::ifstream golden_file(data_dir() + "/golden_report.json");
  json golden = json::parse(golden_file);
  const CaseNode* d8node = nullptr;
  ClassificationReport fresh;  // navigate the golden json directly instead
  std::function<const json*(const json&)> find = [&](const json& node) -> const json* {
    if (node.contains("label") && node.at("label") == "Rep(D8)-type") return &node;
    if (node.contains("children"))
      for (const auto& c : node.at("children"))
        if (const json* hit = find(c)) return hit;
    return nullptr;
  };
  const json* golden_node = find(golden.at("branches"));
  bool golden_ok = golden_node &&
                   golden_node->at("detail").at("theta_condition").at("family_degree") == 4 &&
                   golden_node->at("detail").at("theta_condition").at("admissible_orders") ==
                       json(std::vector<long>{1, 2, 3, 4, 6, 8, 12});
  (void)d8node;
  bool ok = cond.residual_zero && family_ok && admissible_ok && golden_ok &&
            cond.admissible_annihilator.lead() == 1 &&
            cond.admissible_annihilator.degree() == 16 &&
            cond.admissible.size() == 1 + 1 + 2 + 2 + 2 + 4 + 4;
  report(8, ok,
         "constraint is the monic quartic family t^4 - m t^2 + 1 (degree 4 recorded in the "
         "golden report, resolving the degree-4 vs quintic discrepancy); 16 admissible roots "
         "of unity listed, orders {1,2,3,4,6,8,12}");
}

// 9. pruned enumeration matches the brute-force oracle at rank <= 3
void criterion9() {
  std::vector<FusionSearch> instances;
  {
    FusionSearch s;
    s.rank = 1;
    s.dims = {C(1)};
    s.dual = {0};
    instances.push_back(s);
  }
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
    s.dual = {0, 1, 2};
    for (auto dims : std::vector<DimensionVector>{{C(1), C(1), C(1)},
                                                  {C(1), C(1), C(2)},
                                                  {C(1), C(2), C(2)},
                                                  {C(1), C(2), C(1)},
                                                  {C(1), C(2), C(2)}}) {
      s.dims = dims;
      s.dual = {0, 1, 2};
      instances.push_back(s);
    }
    s.dims = {C(1), C(1), C(1)};
    s.dual = {0, 2, 1};
    instances.push_back(s);
    s.dims = {C(1), C(2), C(2)};
    instances.push_back(s);
  }
  bool ok = true;
  int total = 0;
  for (const auto& s : instances) {
    auto fast = enumerate_fusion_rings(s);
    auto slow = enumerate_fusion_rings_bruteforce(s);
    std::set<FusionRing> a(fast.begin(), fast.end()), b(slow.begin(), slow.end());
    if (a != b) ok = false;
    total += static_cast<int>(a.size());
  }
  std::ostringstream msg;
  msg << instances.size() << " instances, " << total
      << " rings; pruned enumeration equals the unpruned oracle on every one";
  report(9, ok, msg.str());
}

// 10. exact character-table properties for the whole catalog
void criterion10(const std::vector<FiniteGroup>& catalog) {
  auto t0 = Clock::now();
  bool ok = true;
  int checked = 0;
  for (const auto& G : catalog) {
    CharacterTable T;
    try {
      T = character_table(G);  // verifies row orthogonality and sum of squares
    } catch (const std::exception& e) {
      std::cout << "  table failure for " << G.name << ": " << e.what() << "\n";
      ok = false;
      continue;
    }
    int k = static_cast<int>(T.chars.size());
    // column orthogonality
    if (!T.product.empty()) {
      // abelian: sum over all characters of chi(x) vanishes unless x = e
      std::vector<int> class_of_elt(G.order());
      const auto& classes = G.conjugacy_classes();
      for (int j = 0; j < k; ++j)
        for (int x : classes[j]) class_of_elt[x] = j;
      std::vector<C> colsum(k);
      for (int j = 0; j < k; ++j) {
        C s;
        for (int i = 0; i < k; ++i) s += T.chars[i][j];
        colsum[j] = s;
      }
      for (int g = 0; g < k && ok; ++g)
        for (int h = 0; h < k && ok; ++h) {
          int x = class_of_elt[G.mul[T.class_reps[g]][G.inv[T.class_reps[h]]]];
          C want = (g == h) ? C(G.order()) : C(0);
          if (!(colsum[x] == want)) ok = false;
        }
    } else {
      for (int g = 0; g < k && ok; ++g)
        for (int h = 0; h < k && ok; ++h) {
          C s;
          for (int i = 0; i < k; ++i) s += T.chars[i][g] * T.chars[i][h].conjugate();
          C want = (g == h) ? C(G.order() / T.class_sizes[g]) : C(0);
          if (!(s == want)) ok = false;
        }
    }
    FusionRing F = rep_fusion_ring(T);
    if (!validate(F).empty()) {
      std::cout << "  fusion axioms fail for Rep(" << G.name << ")\n";
      ok = false;
    }
    ++checked;
  }
  std::ostringstream msg;
  msg << checked << " catalog groups: both orthogonality relations exact, degree sums match, "
      << "Rep(G) rings pass the fusion axioms (" << seconds_since(t0) << " s)";
  report(10, ok && checked == static_cast<int>(catalog.size()), msg.str());
}

int main() {
  auto catalog = bundled_groups(60);
  criterion1(catalog);
  criterion2();
  criterion3();
  criterion4();
  criterion5(catalog);
  criterion6();
  criterion7(catalog);
  criterion8();
  criterion9();
  criterion10(catalog);
  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
