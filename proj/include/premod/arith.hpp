#pragma once

#include <vector>

#include "premod/rational.hpp"

namespace premod {

int euler_phi(int n);

// Legendre symbol (a|p) for odd prime p; returns -1, 0, or 1
long legendre_symbol(long a, long p);

// { n : phi(n) <= bound }, sorted ascending
std::vector<int> roots_of_unity_with_degree_at_most(int bound);

// Field-degree bound on Q(theta):Q from a quadratic relation over Q(D),
// |D| = card_d: 2^(card_d+1) when the constant/lead ratio is a unit,
// 2^card_d otherwise.
Integer cyclotomic_degree_bound(int card_d, bool quadratic_with_unit_ratio);

// k-th term of a_1 = 1, a_{j+1} = a_j (a_j + 1): 1, 2, 6, 42, 1806, ...
Integer sylvester_landau_bound(int k);

}  // namespace premod
