#pragma once

#include <string>
#include <vector>

#include "mp4/sign.hpp"

namespace mp4 {

// Irreducible representation (a;ε) ⊠ (b;δ) of O(p) × O(q). The vectors have
// lengths ⌊p/2⌋ and ⌊q/2⌋ and are weakly decreasing and nonnegative.
struct KTypeO {
  int p = 0;
  int q = 0;
  std::vector<int> a;
  Sign eps = Sign::plus;
  std::vector<int> b;
  Sign delta = Sign::plus;

  friend bool operator==(const KTypeO&, const KTypeO&) = default;
};

// Genuine K′-type of Mp_{2n}(ℝ): weakly decreasing half-integers, stored
// doubled (so every entry is odd).
struct KTypeMp {
  std::vector<int> doubled;

  friend bool operator==(const KTypeMp&, const KTypeMp&) = default;
  friend auto operator<=>(const KTypeMp&, const KTypeMp&) = default;
};

KTypeMp ktype_mp(std::initializer_list<Rational> weights);
std::string to_string(const KTypeO& mu);
std::string to_string(const KTypeMp& mu);

void validate(const KTypeO& mu);
void validate(const KTypeMp& mu);

// Picks ε = + for the two isomorphic labels when p is even and a has no zero
// entry (and likewise for δ); O(0) has only the trivial representation.
KTypeO canonical(KTypeO mu);

// Number of nonzero entries of a weight vector.
int support(const std::vector<int>& weights);

// k′ and l′ of the degree formula.
int k_prime(const KTypeO& mu);
int l_prime(const KTypeO& mu);

int degree_o(const KTypeO& mu);
// Σ|a_i| after removing the (p-q)/2 shift.
int degree_mp(const KTypeMp& mu, int p, int q);

// The K′-type matched with μ in the joint harmonics for the pair
// (O(p,q), Mp_{2n}). Throws NotInHarmonics when k+k′+l+l′ > n.
KTypeMp joint_harmonics(const KTypeO& mu, int n);
KTypeO joint_harmonics_inverse(const KTypeMp& mu, int p, int q);

// Lowest K′-types of real Mp₄ representations.
// Discrete series with L-parameter D_a ⊕ D_b (a ≥ b > 0 half-odd, doubled)
// and label (ε₁, ε₂). For a = b only equal labels are catalogued.
KTypeMp lowest_discrete_series(int a2, int b2, Sign e1, Sign e2);
// J_{P₁,ψ}(χ|·|^s, D̃_{a,ψ}) for half-odd a ≠ 0 (doubled).
KTypeMp lowest_jp1(int a2, Sign chi_minus_one);
// J_{P₂,ψ}(D_a ⊗ |det|^s), a ∈ ½ℤ positive (doubled); one or two types.
std::vector<KTypeMp> lowest_jp2(int a2);
// J_{B,ψ}(χ₁|·|^{s₁}, χ₂|·|^{s₂}) with ε_i = χ_i(-1).
KTypeMp lowest_jb(Sign e1, Sign e2);

}  // namespace mp4
