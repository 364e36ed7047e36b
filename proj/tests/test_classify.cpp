#include "premod/classify.hpp"

#include <set>

#include "doctest.h"

using namespace premod;
using C = CyclotomicNumber;

namespace {

const std::vector<FiniteGroup>& catalog() {
  static std::vector<FiniteGroup> groups = bundled_groups(60);
  return groups;
}

void walk(const CaseNode& node, const std::function<void(const CaseNode&)>& fn) {
  fn(node);
  for (const auto& c : node.children) walk(c, fn);
}

}  // namespace

TEST_CASE("external fact ledger has exactly the facts the analysis uses") {
  std::set<std::string> keys;
  for (const auto& [key, fact] : external_fact_ledger()) {
    keys.insert(key);
    CHECK_FALSE(fact.citation.empty());
    CHECK_FALSE(fact.statement.empty());
  }
  std::set<std::string> expected{"Deligne",   "RSW1",   "BGNPRW1",  "ENO1-8.32",
                                 "NR1-4.2",   "S1-neargroup", "GalindoCommunication",
                                 "BNRW2",     "EGO1-6.3", "GN2-DGNO1", "BN1",
                                 "BPR1",      "Brug"};
  CHECK(keys == expected);
}

TEST_CASE("divisibility check") {
  CHECK_FALSE(divisibility_check(C(10), C(19)));
  CHECK_FALSE(divisibility_check(C(6), C(8)));
  CHECK(divisibility_check(C(2), C(14)));
  CHECK_THROWS(divisibility_check(C::sqrt5(), C(10)));
  CHECK_THROWS(divisibility_check(C(Rational(1, 2)), C(1)));
}

TEST_CASE("rank-4-center twist filter") {
  auto z4 = rank4_twist_filter("Z4");
  CHECK(z4.candidate_orders == std::vector<int>{1, 2, 3, 4, 5, 6, 8, 10, 12});
  CHECK(z4.surviving_orders == std::vector<int>{10});
  CHECK(z4.survivor_dimension == C(1) + C::sqrt5());
  CHECK(z4.computed_orders == std::vector<int>{10});
  bool has_t0 = false, has_t2 = false;
  for (const auto& s : z4.solutions) {
    if (s.order == 4 && s.t == 0 && s.d == C(2)) has_t0 = true;
    if (s.order == 10 && s.t == 2 && s.d == C(1) + C::sqrt5()) has_t2 = true;
  }
  CHECK(has_t0);  // removed by the near-group rule, recorded as excluded
  CHECK(has_t2);

  auto klein = rank4_twist_filter("Z2xZ2");
  CHECK(klein.surviving_orders == std::vector<int>{10});
  CHECK(klein.survivor_dimension == C(1) + C::sqrt5());

  auto d10 = rank4_twist_filter("D10");
  CHECK(d10.surviving_orders == std::vector<int>{4, 12});
  CHECK(d10.survivor_dimension == C(3));
  CHECK(d10.total_dimension == C(19));
  CHECK(d10.computed_orders == std::vector<int>{4});

  auto a4 = rank4_twist_filter("A4");
  CHECK(a4.surviving_orders == std::vector<int>{4, 12});
  CHECK(a4.survivor_dimension == C(2) * C::sqrt3());
  CHECK(a4.computed_orders == std::vector<int>{4});
}

TEST_CASE("synthetic rank-4-center data satisfy the last-entry lemma") {
  for (const char* label : {"Z4", "Z2xZ2", "D10", "A4"}) {
    auto D = synthetic_rank4_center_datum(label);
    CHECK(check_balancing(D).empty());
    auto center = muger_center(D);
    CHECK(center.indices == std::vector<int>{0, 1, 2, 3});
    C center_dim = global_dimension({D.dims.begin(), D.dims.end() - 1});
    CHECK(D.S[4][4] == last_entry_value(5, center_dim));
    CHECK(C(named_group(label).order()) == center_dim);
  }
  CHECK(synthetic_rank4_center_datum("Z4").S[4][4] == C(-4));
  CHECK(synthetic_rank4_center_datum("Z2xZ2").S[4][4] == C(-4));
}

TEST_CASE("symmetric branch census") {
  CaseNode node = classify_symmetric_rank5(catalog());
  REQUIRE(node.children.size() == 8);
  std::vector<std::string> labels;
  for (const auto& c : node.children) {
    labels.push_back(c.label);
    CHECK(c.outcome == "REALIZED");
    REQUIRE(c.datum.has_value());
    CHECK(check_balancing(*c.datum).empty());
    CHECK(degeneracy_class(*c.datum) == DegeneracyClass::symmetric);
  }
  CHECK(labels == std::vector<std::string>{"Rep(Z5)", "Rep(D8)", "Rep(Q8)", "Rep(D14)",
                                           "Rep(Z5:Z4)", "Rep(Z7:Z3)", "Rep(S4)", "Rep(A5)"});
  CHECK(node.detail.at("sylvester_bound").get<std::string>() == "1806");
}

TEST_CASE("rank-4-center branch eliminates all four groups") {
  CaseNode node = classify_center_rank4(catalog());
  REQUIRE(node.children.size() == 4);
  for (const auto& g : node.children) {
    CHECK(g.outcome == "ELIMINATED");
    CHECK(verify_witness(g.witness));
  }
  CHECK(node.children[0].witness.at("text").get<std::string>() ==
        ((C(1) + C::sqrt5()) / C(4)).str());
  CHECK(node.children[2].witness.at("kind") == "divisibility");
  CHECK(node.children[3].witness.at("text").get<std::string>() == (C(2) / C::sqrt3()).str());
  // the census drives the group list
  CHECK(node.detail.at("census") ==
        json(std::vector<std::string>{"Z2xZ2", "Z4", "D10", "A4"}));
}

TEST_CASE("rank-3-center branch") {
  CaseNode node = classify_center_rank3(catalog());
  REQUIRE(node.children.size() == 2);
  const CaseNode& z3 = node.children[0];
  CHECK(z3.outcome == "ELIMINATED");
  IntPolynomial expected({Integer(1), Integer(5), Integer(1)});
  CHECK(poly_from_json(z3.witness.at("polynomial")) == expected);
  CHECK(verify_witness(z3.witness));
  CHECK(z3.detail.at("twist_equality_forced").get<bool>());

  const CaseNode& s3 = node.children[1];
  REQUIRE(s3.children.size() == 2);
  const CaseNode& case1 = s3.children[0];
  CHECK(case1.outcome == "REALIZED");
  REQUIRE(case1.datum.has_value());
  std::vector<RootOfUnity> want{RootOfUnity(0, 1), RootOfUnity(0, 1), RootOfUnity(0, 1),
                                RootOfUnity(1, 2), RootOfUnity(1, 2)};
  CHECK(case1.datum->twists == want);
  auto dioph = case1.detail.at("diophantine");
  CHECK(dioph.at("kept") == json(std::vector<std::array<int, 2>>{{1, 2}}));
  CHECK(dioph.at("pruned") == json(std::vector<std::array<int, 2>>{{4, 0}}));

  const CaseNode& case2 = s3.children[1];
  CHECK(case2.outcome == "ELIMINATED");
  CHECK(case2.witness.at("found_ranks") == json(std::vector<int>{21, 39}));
  CHECK(verify_witness(case2.witness));
}

TEST_CASE("x3 row diophantine split") {
  auto split = x3_row_diophantine(2, 3);
  REQUIRE(split.kept.size() == 1);
  CHECK(split.kept[0] == std::array<int, 2>{1, 2});
  REQUIRE(split.pruned.size() == 1);
  CHECK(split.pruned[0] == std::array<int, 2>{4, 0});
  CHECK(split.bound == 3);
}

TEST_CASE("rank-2-center branch") {
  CaseNode node = classify_center_rank2();
  REQUIRE(node.children.size() == 2);
  int realized = 0, divisibility = 0;
  walk(node, [&](const CaseNode& n) {
    if (n.outcome == "REALIZED") {
      ++realized;
      REQUIRE(n.datum.has_value());
      CHECK(check_balancing(*n.datum).empty());
      auto center = muger_center(*n.datum);
      CHECK(center.indices == std::vector<int>{0, 1});
      CHECK(center.group_label.value_or("") == "Z2");
    }
    if (n.outcome == "ELIMINATED" && n.witness.at("kind") == "divisibility") {
      ++divisibility;
      CHECK(verify_witness(n.witness));
    }
  });
  CHECK(realized == 3);  // Rep(D8)-type, PSU(2)8, Rep(D14)-type
  CHECK(divisibility == 3);  // 6|8, 6|14, 10|14 all fail
  // the theta condition rides on the Rep(D8)-type node
  bool saw_theta = false;
  walk(node, [&](const CaseNode& n) {
    if (n.detail.contains("theta_condition")) {
      saw_theta = true;
      auto cond = n.detail.at("theta_condition");
      CHECK(cond.at("residual_identically_zero").get<bool>());
      CHECK(cond.at("family_degree").get<int>() == 4);
      CHECK(cond.at("admissible_orders") == json(std::vector<long>{1, 2, 3, 4, 6, 8, 12}));
      CHECK(cond.at("annihilator_degree").get<int>() == 16);
    }
  });
  CHECK(saw_theta);
}

TEST_CASE("modular branch carries the four bundled data") {
  CaseNode node = modular_branch();
  REQUIRE(node.children.size() == 4);
  std::vector<std::string> labels;
  for (const auto& c : node.children) {
    labels.push_back(c.label);
    CHECK(c.outcome == "EXTERNAL_FACT");
    CHECK(c.citation == "BNRW2");
    REQUIRE(c.datum.has_value());
    CHECK(check_balancing(*c.datum).empty());
    CHECK(degeneracy_class(*c.datum) == DegeneracyClass::modular);
  }
  CHECK(labels == std::vector<std::string>{"SU(2)4", "SU(2)9/Z2", "SU(5)1", "SU(3)4/Z3"});
}

TEST_CASE("full report: structure, witnesses, determinism") {
  auto report = classify_rank5(catalog());
  CHECK(report.summary.at("symmetric").get<int>() == 8);
  CHECK(report.summary.at("properly_premodular").get<int>() == 4);
  CHECK(report.summary.at("modular").get<int>() == 4);
  CHECK(report.external_facts_used.size() == external_fact_ledger().size());

  int eliminated = 0;
  walk(report.root, [&](const CaseNode& n) {
    if (n.outcome == "ELIMINATED" && n.witness.contains("kind")) {
      ++eliminated;
      CHECK(verify_witness(n.witness));
    }
    if (n.outcome == "REALIZED") {
      REQUIRE(n.datum.has_value());
      CHECK(check_balancing(*n.datum).empty());
      CHECK(fp_dimensions(n.datum->ring) == n.datum->dims);
    }
  });
  CHECK(eliminated >= 7);

  // T-matrix of the Rep(S4)-type properly premodular branch
  bool saw_s4_branch = false;
  walk(report.root.children[1], [&](const CaseNode& n) {
    if (n.outcome == "REALIZED" && n.datum && n.datum->dims[3] == C(3)) {
      saw_s4_branch = true;
      CHECK(n.datum->twists ==
            std::vector<RootOfUnity>{RootOfUnity(0, 1), RootOfUnity(0, 1), RootOfUnity(0, 1),
                                     RootOfUnity(1, 2), RootOfUnity(1, 2)});
    }
  });
  CHECK(saw_s4_branch);

  auto again = classify_rank5(catalog());
  CHECK(canonical_dump(report_to_json(report)) == canonical_dump(report_to_json(again)));
}
