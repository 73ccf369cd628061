#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "alpharep/char_table.hpp"

namespace alpharep {

// Character values on elements of some group containing every queried element.
class CharacterEvaluator {
public:
  virtual ~CharacterEvaluator() = default;
  virtual std::vector<Cyclotomic> values(const std::vector<Permutation> &elems) const = 0;
  virtual std::string label() const = 0;
};

using EvaluatorPtr = std::shared_ptr<const CharacterEvaluator>;

// Through the table's class locator.
EvaluatorPtr table_character(const ClassFunction &chi, std::string label = {});
EvaluatorPtr function_character(std::function<Cyclotomic(const Permutation &)> f,
                                std::string label);
// fix(x) - 1 on the natural points, optionally times sign(x).
EvaluatorPtr natural_augmentation(bool sign_twisted = false);
// fix(act(x)) - 1.
EvaluatorPtr action_augmentation(const GroupAction &action, std::string label = {});
// Outer tensor on A x B realized on deg(A) + deg(B) points.
EvaluatorPtr outer_tensor(EvaluatorPtr a, std::size_t degree_a, EvaluatorPtr b,
                          std::size_t degree_b);
EvaluatorPtr sum_character(std::vector<EvaluatorPtr> parts);

// dim V^Q = (1/|Q|) sum chi(g); throws DataError unless a non-negative integer.
std::int64_t fixed_space_dim(const CharacterEvaluator &chi, const PermGroup &q);
std::int64_t fixed_space_dim(const CharacterEvaluator &chi, const std::vector<Permutation> &q);

struct LocalAlpha {
  std::uint64_t p = 0;
  std::uint64_t value = 1; // [P:Q] for the witness Q
  PermGroup sylow;
  PermGroup witness;
  std::size_t subgroups_examined = 0;
};

struct AlphaReport {
  std::string label;
  std::int64_t degree = 0;
  std::uint64_t alpha = 1;
  std::vector<LocalAlpha> local;
};

// min [P:Q] over Q <= P with V^Q != 0, descending through maximal subgroups.
LocalAlpha alpha_p(const PermGroup &g, const CharacterEvaluator &chi, std::uint64_t p);
AlphaReport alpha(const PermGroup &g, const CharacterEvaluator &chi);
AlphaReport alpha(const ClassFunction &chi, std::string label = {});

struct DirectSumAlpha {
  std::vector<std::uint64_t> parts;
  std::uint64_t gcd = 0;
  std::uint64_t direct = 0;
  bool agree = false;
};
DirectSumAlpha direct_sum_alpha(const std::vector<ClassFunction> &chis);

struct OrbitTypeNode {
  std::size_t class_id = 0;
  std::uint64_t order = 1;
  std::uint64_t index = 1;
  std::int64_t dim = 0;
  std::string name;
  bool genuine = true; // false for a top node drawn only for display
};

struct OrbitTypeLattice {
  std::vector<OrbitTypeNode> nodes; // by decreasing order
  std::vector<std::pair<std::size_t, std::size_t>> edges; // (upper, lower) node indices
  std::uint64_t gcd_index = 0;
};

// Exact isotropy classes on the unit sphere, with G added on top when absent.
OrbitTypeLattice orbit_types(const PermGroup &g, const CharacterEvaluator &chi);
OrbitTypeLattice orbit_types(const ClassFunction &chi);
std::string to_dot(const OrbitTypeLattice &l, const std::string &title);

struct Realizability {
  std::uint64_t alpha = 1;
  std::optional<bool> realizable; // empty above the lattice bound
  std::optional<OrbitTypeNode> witness;
};
Realizability is_realizable(const PermGroup &g, const CharacterEvaluator &chi);
Realizability is_realizable(const ClassFunction &chi);

struct SolvabilityReport {
  bool derived_series_solvable = false;
  bool all_nontrivial_alpha_gt_1 = false;
  bool agree = false;
  std::vector<std::uint64_t> alphas;
};
SolvabilityReport solvability_crosscheck(const TablePtr &t);

bool totally_trivial_scan(const TablePtr &t);

struct Constituent {
  std::size_t index = 0;
  std::int64_t multiplicity = 0;
  std::uint64_t alpha = 1;
};

struct InductionReport {
  std::uint64_t alpha_omega = 1;
  std::uint64_t alpha_induced = 1;
  bool divides = false;
  bool trivial_transfer = false;
  bool quotient_solvable = false;
  bool constituent_with_alpha_1 = false;
  std::vector<Constituent> constituents;
  bool ok = false;
};
// omega on the table of N, N normal in the group of g_table.
InductionReport induction_alpha_checks(const ClassFunction &omega, const TablePtr &g_table);

struct TensorReport {
  std::uint64_t alpha_a = 1, alpha_b = 1, alpha_tensor = 1;
  bool lcm_divides = false;
  bool divides_product = false;
  bool coprime_orders = false;
  bool equal_when_coprime = false;
  bool ok = false;
};
TensorReport tensor_alpha_checks(const ClassFunction &rho, const ClassFunction &psi);

// Small-group name such as Z5, V4, D3, A4, Q8.
std::string structure_name(const PermGroup &h);

} // namespace alpharep
