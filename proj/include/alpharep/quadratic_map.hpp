#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alpharep/groebner.hpp"
#include "alpharep/matrix_rep.hpp"

namespace alpharep {

// phi = A o Delta in coordinates of a basis of the image of A.
struct QuadraticMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  MatrixRep source;
  MatQ projection;   // A on Sym^2, basis as in sym_square_matrix
  MatQ image_basis;  // columns span A(Sym^2)
  MatQ coefficients; // target_dim x sym_dim; phi(x) = coefficients * Delta(x)
  std::vector<Polynomial> components;
  std::vector<MatC> target_generators; // action on image coordinates
  std::vector<std::size_t> constituents; // irreducibles projected onto
};

// A = sum over constituents psi of the target of (psi(1)/|G|) sum_g conj(psi(g)) rho_U(g).
// Throws InvalidArgument if a constituent is missing from Sym^2 of the source,
// DataError if A has irrational entries.
QuadraticMap quad_map_build(const MatrixRep &source, const ClassFunction &target,
                            const TablePtr &t);

// Re-express the components in the given image basis (columns).
QuadraticMap with_basis(const QuadraticMap &phi, const MatQ &basis);

struct ProjectionCheck {
  bool idempotent = false;
  bool commutes = false;
  Rational trace;
  bool ok = false;
};
ProjectionCheck check_projection(const QuadraticMap &phi, std::int64_t expected_trace);

struct EquivarianceCheck {
  bool ok = false;
  std::string route; // "substitution" or "coefficients"
  std::vector<bool> per_generator;
};
// phi(rho(g) x) = T(g) phi(x) as polynomial identities on generators.
EquivarianceCheck check_equivariance(const QuadraticMap &phi);

struct Admissibility {
  bool admissible = false;
  std::vector<IdealBasis> certificates; // one per dehomogenized variable
};
Admissibility admissibility_check(const std::vector<Polynomial> &components);
Admissibility admissibility_check(const QuadraticMap &phi);

// p(M x), M rational.
Polynomial substitute_linear(const Polynomial &p, const MatQ &m);

struct VminusReduction {
  std::size_t n = 0;
  std::vector<int> generator_signs;      // rho_{V-}(g) = sign * rho_V(g)
  bool signs_match_parity = false;
  bool sym_squares_equal = false;        // Sym^2 rho_{V-}(g) = Sym^2 rho_V(g)
  bool spot_check = false;               // Norton square, random points, exact
  bool ok = false;
};
VminusReduction reduce_Vminus_to_V(std::size_t n, unsigned seed = 1);

} // namespace alpharep
