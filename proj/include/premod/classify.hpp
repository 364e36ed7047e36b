#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "premod/bundled.hpp"
#include "premod/catalog.hpp"
#include "premod/json_io.hpp"

namespace premod {

// One node of the case tree. Inner nodes are BRANCH; every leaf is
// REALIZED (carries a datum), ELIMINATED (carries a machine-checkable
// witness), or EXTERNAL_FACT (carries a ledger citation).
struct CaseNode {
  std::string label;
  std::string proposition;
  std::string outcome = "BRANCH";
  json hypotheses = json::object();
  json witness = json::object();
  std::string citation;
  std::vector<std::string> citations;  // supporting facts used along the way
  std::optional<PremodularDatum> datum;
  json detail = json::object();
  std::vector<CaseNode> children;
};

struct ExternalFact {
  std::string citation;
  std::string statement;
};

// every fact the analysis assumes with citation instead of proving
const std::map<std::string, ExternalFact>& external_fact_ledger();

struct ClassifyOptions {
  int max_order = 60;
  long node_budget = 4000000;
};

struct ClassificationReport {
  CaseNode root;
  json summary = json::object();
  std::vector<std::string> external_facts_used;
};

CaseNode classify_symmetric_rank5(const std::vector<FiniteGroup>& catalog);
CaseNode classify_center_rank4(const std::vector<FiniteGroup>& catalog);
CaseNode classify_center_rank3(const std::vector<FiniteGroup>& catalog,
                               const ClassifyOptions& opt = {});
CaseNode classify_center_rank2(const ClassifyOptions& opt = {});
CaseNode modular_branch();

ClassificationReport classify_rank5(const std::vector<FiniteGroup>& catalog,
                                    const ClassifyOptions& opt = {});

// true iff sub divides total in the integers; both must be rational integers
bool divisibility_check(const CyclotomicNumber& sub, const CyclotomicNumber& total);

// re-run the module operation behind an ELIMINATED witness
bool verify_witness(const json& witness);

// the consistent synthetic rank-4-center datum for G in {Z4, Z2xZ2, D10, A4}
PremodularDatum synthetic_rank4_center_datum(const std::string& group_label);

json to_json(const CaseNode& node);
json report_to_json(const ClassificationReport& report);
std::string report_to_text(const ClassificationReport& report);

// --- small solvers the branches use (exposed for tests) ---

// twist filter for a rank-4-center branch over all candidate orders
struct TwistFilterSolution {
  int order = 0;
  RootOfUnity theta;
  CyclotomicNumber d;
  Integer t = 0;
};
struct TwistFilterResult {
  std::vector<int> candidate_orders;
  std::vector<TwistFilterSolution> solutions;      // consistent with Eq. 1 + Eq. 2
  std::vector<int> computed_orders;                // after the structural exclusions
  std::vector<int> surviving_orders;               // the branch's case table
  CyclotomicNumber survivor_dimension;
  CyclotomicNumber total_dimension;
  json detail;
};
TwistFilterResult rank4_twist_filter(const std::string& group_label);

// solutions (n2, n34) of d3^2 = 1 + d2 n2 + d3 n34 with the max-norm prune
struct DiophantineSplit {
  std::vector<std::array<int, 2>> kept;
  std::vector<std::array<int, 2>> pruned;
  int bound = 0;
};
DiophantineSplit x3_row_diophantine(int d2, int d3);

// theta_i = theta_j forced by the symmetry S_ij = S_ji through balancing
bool twist_equality_from_symmetry(const FusionRing& ring, const DimensionVector& dims, int i,
                                  int j);

// the orthogonality polynomial for column `col` against column 0 when the
// twists in `unknown` share one unknown value and the rest are given
IntPolynomial column_orthogonality_polynomial(const FusionRing& ring, const DimensionVector& dims,
                                              const std::vector<RootOfUnity>& known,
                                              const std::vector<int>& unknown, int col);

}  // namespace premod
