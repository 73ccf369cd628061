#pragma once

#include <vector>

#include "alpharep/polynomial.hpp"

namespace alpharep {

struct IdealBasis {
  std::vector<Polynomial> polys;
  bool groebner = false;
  std::size_t pairs_reduced = 0;
  std::size_t pairs_skipped = 0;
};

// Normal form of f modulo g (full reduction).
Polynomial reduce(const Polynomial &f, const std::vector<Polynomial> &g);

// Reduced grevlex basis, monic, sorted by increasing leading monomial.
IdealBasis buchberger(const std::vector<Polynomial> &generators);

// Weak Nullstellensatz: the reduced basis is {1}.
bool has_no_common_zero(const std::vector<Polynomial> &generators);

// x_k := 1 in every polynomial (k is 0-based).
std::vector<Polynomial> dehomogenize(const std::vector<Polynomial> &system, std::size_t k);

bool ideal_member(const Polynomial &f, const IdealBasis &basis);

} // namespace alpharep
