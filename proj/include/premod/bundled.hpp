#pragma once

#include <string>
#include <vector>

#include "premod/premodular.hpp"

namespace premod {

struct BundledDatum {
  std::string name;
  PremodularDatum datum;
  std::string note;
};

// truncated spin fusion at level k; simples indexed by doubled spin 0..k
FusionRing su2_level_ring(int k);
// integer-spin subring of level k, indexed by spin 0..floor(k/2)
FusionRing su2_integer_spin_ring(int k);

// affine sl3 level-k fusion on dominant weights (a,b), a+b <= k
struct Sl3Weight {
  int a = 0, b = 0;
  bool operator<(const Sl3Weight& o) const { return a != o.a ? a < o.a : b < o.b; }
  bool operator==(const Sl3Weight& o) const { return a == o.a && b == o.b; }
};
int sl3_fusion_coefficient(int level, Sl3Weight l, Sl3Weight m, Sl3Weight n);

// the four realized properly premodular data
PremodularDatum rep_d8_branch_datum();   // dims (1,1,2,1,1), T = (1,1,1,-1,-1)
PremodularDatum rep_d14_branch_datum();  // dims (1,1,2,2,2)
PremodularDatum rep_s4_branch_datum();   // dims (1,1,2,3,3), T = (1,1,1,-1,-1)
PremodularDatum psu2_8_datum();          // dims (1,1,2phi,phi^2,phi^2)

// the four modular entries
PremodularDatum su2_4_datum();
PremodularDatum psu2_9_datum();   // "SU(2)_9 / Z2"
PremodularDatum su5_1_datum();
PremodularDatum su3_4_z3_datum();

std::vector<BundledDatum> bundled_properly_premodular();
std::vector<BundledDatum> bundled_modular();

}  // namespace premod
