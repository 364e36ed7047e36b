#pragma once

#include <optional>
#include <string>
#include <vector>

#include "premod/fusion_ring.hpp"
#include "premod/groups.hpp"

namespace premod {

using SMatrix = std::vector<std::vector<CyclotomicNumber>>;

struct PremodularDatum {
  FusionRing ring;
  DimensionVector dims;
  std::vector<RootOfUnity> twists;
  SMatrix S;
};

// S[x][y] = (theta_x theta_y)^-1 sum_k N[x*][y][k] theta_k d_k
SMatrix s_from_balancing(const FusionRing& ring, const DimensionVector& dims,
                         const std::vector<RootOfUnity>& twists);

PremodularDatum make_datum(const FusionRing& ring, const DimensionVector& dims,
                           const std::vector<RootOfUnity>& twists);

struct BalancingViolation {
  int x = 0, y = 0;
  CyclotomicNumber lhs, rhs;
};

std::vector<BalancingViolation> check_balancing(const PremodularDatum& D);

// full datum check used by the CLI; tags: ring axiom names, "dims",
// "s-shape", "s-symmetry", "s-first-column", "twist", "balancing",
// "orthogonality", "theta-condition"
struct DatumViolation {
  std::string tag;
  std::string detail;
};
std::vector<DatumViolation> check_datum(const PremodularDatum& D);

struct CenterDescription {
  std::vector<int> indices;
  bool tannakian = false;
  std::optional<std::string> group_label;
};

CenterDescription muger_center(const PremodularDatum& D);

enum class DegeneracyClass { modular, symmetric, properly_premodular };
std::string to_string(DegeneracyClass c);

DegeneracyClass degeneracy_class(const PremodularDatum& D);

// Lemma "last S-entry": rank r with rank r-1 center forces S[r-1][r-1] = -dim C'
CyclotomicNumber last_entry_value(int rank, const CyclotomicNumber& center_dim);

// sum_k S[k][x] conj(S[k][y])
CyclotomicNumber column_orthogonality_residual(const PremodularDatum& D, int x, int y);

// ---- twist condition (the quadratic-exponent integrality constraint) ----

// the constraint at object x with exactly one unknown twist:
//   theta^2 + theta^-2 = (1/D^2) sum_{b,c} N_{b,c}^x d_b d_c (theta_b/theta_c)^2
// with the common value required to be a rational integer.
struct ThetaCondition {
  int object = 0;
  bool residual_zero = false;      // equation holds identically in theta
  bool residual_rational = true;   // cleared residual has rational coefficients
  IntPolynomial residual;          // cleared LHS - RHS; zero polynomial when identity
  std::vector<std::pair<int, IntPolynomial>> family;  // m -> t^4 - m t^2 + 1, |m| <= 2
  std::vector<RootOfUnity> admissible;                // all root-of-unity solutions
  IntPolynomial admissible_annihilator;  // product of Phi_n over admissible orders
};

ThetaCondition theta_condition_residual(const FusionRing& ring, const DimensionVector& dims,
                                        const std::vector<std::optional<RootOfUnity>>& twists,
                                        int x);

struct ThetaMembership {
  CyclotomicNumber lhs;  // theta_x^2 + theta_x^-2
  CyclotomicNumber rhs;  // the normalized fusion sum
  bool rhs_integral = false;
};

ThetaMembership theta_condition_value(const PremodularDatum& D, int x);

// all roots of unity among the roots of p
std::vector<RootOfUnity> root_of_unity_solutions(const IntPolynomial& p);

}  // namespace premod
