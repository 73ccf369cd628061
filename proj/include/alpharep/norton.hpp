#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alpharep/linalg.hpp"
#include "alpharep/polynomial.hpp"

namespace alpharep {

// U spanned by e_ij over 2-subsets {i,j} of {1..n}; f_i = sum_{j != i} e_ij;
// W = { sum z_i f_i : sum z_i = 0 } with the orthogonal projection P : U -> W.
struct NortonAlgebra {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs; // lexicographic
  MatQ f;             // |pairs| x n, columns f_i
  MatQ gram;          // <f_i, f_j>
  MatQ projection;    // P on U
  MatQ f_coordinates; // left inverse of f: u in F -> z
};

NortonAlgebra norton_build(std::size_t n);

// Elements of W are given by z with sum z = 0.
VecQ norton_embed(const NortonAlgebra &a, const std::vector<Rational> &z);
std::vector<Rational> norton_product(const NortonAlgebra &a, const std::vector<Rational> &z1,
                                     const std::vector<Rational> &z2);
// w * w = (n-4)/(n-2) * (z_k^2 - sigma_2/n)_k
std::vector<Rational> norton_square_closed_form(std::size_t n, const std::vector<Rational> &z);

// Components z_1..z_{n-1} of w * w through P, in the free variables z_1..z_{n-1}
// (z_n = -(z_1 + ... + z_{n-1})).
std::vector<Polynomial> norton_square_polynomials(const NortonAlgebra &a);

struct NortonIdentities {
  bool projection_idempotent = false;
  bool identity_on_w = false;
  bool projection_equivariant = false;
  bool f_equivariant = false; // sigma(f_i) = f_sigma(i)
  bool commutative = false;
  bool product_equivariant = false;
  bool ok = false;
};
NortonIdentities check_norton_identities(const NortonAlgebra &a);

struct NortonNilpotents {
  std::size_t n = 0;
  // <w.w, f_k> = (n-4) z_k^2 + sigma_2 holds as a polynomial identity on W.
  bool identity_verified = false;
  bool degenerate = false; // n = 4: the product vanishes on W
  bool none = false;       // odd n
  std::vector<std::vector<int>> family; // sign patterns with |I| = n/2
  bool family_verified = false;         // each pattern squares to 0 through P
  std::string description;
};
NortonNilpotents norton_nilpotents(std::size_t n);

struct WitnessOrbits {
  std::size_t n = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
  std::vector<std::int64_t> x, y;
  std::uint64_t orbit_x = 0, orbit_y = 0;             // in V
  std::uint64_t orbit_x_minus = 0, orbit_y_minus = 0; // in V-
  std::uint64_t gcd_v = 0, gcd_vminus = 0;
  std::uint64_t alpha_v = 0, alpha_vminus = 0; // p and 2p
  std::optional<std::uint64_t> computed_alpha_v, computed_alpha_vminus;
  bool ok = false;
};
// n an odd prime power > 3; the alpha cross-check runs when crosscheck is set.
WitnessOrbits sn_witness_orbits(std::size_t n, bool crosscheck = false);

} // namespace alpharep
