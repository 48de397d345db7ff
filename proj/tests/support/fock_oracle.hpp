#pragma once

#include <vector>

#include "mp4/ktypes.hpp"

namespace mp4test {

// Smallest d such that the O(p) × O(q) type μ occurs in the degree-d
// polynomials on C^{(p+q)×n}, found by listing monomials in torus-weight
// coordinates. Only p, q ≤ 3 are handled. Returns -1 if μ does not occur up
// to max_degree.
int fock_degree(const mp4::KTypeO& mu, int n, int max_degree = 10);

// The same for a single factor O(m) acting on C^{m×n}; weights has length
// ⌊m/2⌋.
int fock_degree_factor(int m, const std::vector<int>& weights, mp4::Sign eps, int n,
                       int max_degree = 10);

}  // namespace mp4test
