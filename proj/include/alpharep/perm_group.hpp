#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "alpharep/permutation.hpp"

namespace alpharep {

class FiniteGroup;

// Global size limits; the CLI's --bound overrides the element bound.
struct Bounds {
  std::uint64_t elements = 1'000'000;
  std::uint64_t lattice = 2500;
  std::uint64_t dixon = 10'000;
};
Bounds &bounds();

// Finitely generated permutation group with a deterministic
// Schreier-Sims stabilizer chain built on construction.
class PermGroup {
public:
  PermGroup();
  // degree is only needed when gens is empty
  explicit PermGroup(std::vector<Permutation> gens, std::size_t degree = 0);
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const;
  const std::vector<Permutation> &generators() const;
  const std::string &name() const;
  PermGroup &set_name(std::string n);

  std::uint64_t order() const;
  bool contains(const Permutation &g) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;
  bool is_subgroup_of(const PermGroup &g) const;
  bool is_normal_in(const PermGroup &g) const;

  // Visits every element once, identity first; stops when f returns false.
  void for_each_element(const std::function<bool(const Permutation &)> &f) const;
  // Throws BoundExceeded when the order is above the element bound.
  std::vector<Permutation> elements() const;

  std::vector<std::size_t> base() const;
  std::vector<std::size_t> orbit(std::size_t point) const;
  bool is_transitive() const;

  // Element enumeration with class data, built once (thread safe).
  const FiniteGroup &enumerated() const;

  struct Impl;

private:
  std::shared_ptr<Impl> d_;
  std::string name_;
};

// <H, g>
PermGroup extend(const PermGroup &h, const Permutation &g);
// x H x^-1
PermGroup conjugate(const PermGroup &h, const Permutation &x);
bool normalizes(const Permutation &g, const PermGroup &h);
bool equal_groups(const PermGroup &a, const PermGroup &b);
PermGroup normal_closure(const PermGroup &g, const std::vector<Permutation> &xs);
PermGroup derived_subgroup(const PermGroup &g);
std::vector<PermGroup> derived_series(const PermGroup &g);
bool is_solvable(const PermGroup &g);
// Deterministic: grows a p-subgroup by p-elements that normalise it,
// scanning elements in enumeration order.
PermGroup sylow_subgroup(const PermGroup &g, std::uint64_t p);
// Group on deg(a)+deg(b) points.
PermGroup direct_product(const PermGroup &a, const PermGroup &b);
// Lowest common multiple of element orders (requires enumeration).
std::uint64_t exponent(const PermGroup &g);

} // namespace alpharep
