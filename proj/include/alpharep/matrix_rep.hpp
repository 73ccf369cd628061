#pragma once

#include <istream>
#include <string>
#include <vector>

#include "alpharep/char_table.hpp"
#include "alpharep/cyclotomic.hpp"
#include "alpharep/linalg.hpp"
#include "alpharep/perm_group.hpp"

namespace alpharep {

using MatC = Mat<Cyclotomic>;

// Generator matrices (column convention) aligned with group.generators().
struct MatrixRep {
  std::string name;
  PermGroup group;
  std::vector<MatC> generators;
  std::size_t dim = 0;

  bool rational() const;
};

struct RepElement {
  Permutation g;
  MatC m;
};

// Every group element with its matrix. Throws DataError when the
// generator assignment does not extend to a homomorphism.
std::vector<RepElement> enumerate_rep(const MatrixRep &rep);

// Traces on the table's classes; the table must locate elements of rep.group.
ClassFunction rep_character(const MatrixRep &rep, const TablePtr &t);

// g -> M(g^-1)^T
MatrixRep contragredient(const MatrixRep &rep);

// Augmentation of S_n on e_i = E_i - mean, i < n, generated by (1 2), (1 2 ... n);
// optionally tensored with the sign.
MatrixRep augmentation_rep(std::size_t n, bool sign_twisted = false);

// Pairs (i, j), i <= j, in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> sym_basis(std::size_t d);
// Action on Sym^2 in the basis e_i(x)e_i, e_i(x)e_j + e_j(x)e_i, where v(x)v has
// coordinates x_i x_j; so Delta(M x) = sym_square_matrix(M) Delta(x).
MatC sym_square_matrix(const MatC &m);
MatrixRep sym_square_rep(const MatrixRep &rep);

MatQ to_rational(const MatC &m); // throws DataError on irrational entries
MatC to_cyclotomic(const MatQ &m);

// Text form:
//   name <id>
//   degree <n>
//   dim <d>
//   gen <cycles>     followed by d rows of d entries (E(n) grammar)
MatrixRep read_rep(std::istream &in, const std::string &source = "<input>");
MatrixRep load_rep(const std::string &path);

} // namespace alpharep
