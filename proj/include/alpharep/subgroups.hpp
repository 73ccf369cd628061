#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "alpharep/finite_group.hpp"

namespace alpharep {

using ElementSet = boost::dynamic_bitset<>;

struct ElementSetHash {
  std::size_t operator()(const ElementSet &s) const;
};

// Subgroup generated by the given element indices.
ElementSet closure(const FiniteGroup &g, const std::vector<FiniteGroup::Index> &gens);
ElementSet element_set(const FiniteGroup &g, const PermGroup &h);
PermGroup to_perm_group(const FiniteGroup &g, const ElementSet &s);
ElementSet conjugate_set(const FiniteGroup &g, const ElementSet &s, FiniteGroup::Index x);
std::vector<FiniteGroup::Index> members(const ElementSet &s);

struct SubgroupClass {
  ElementSet rep;
  std::vector<FiniteGroup::Index> gens;
  std::uint64_t order = 1;
  std::uint64_t index = 1;
  std::vector<ElementSet> conjugates; // rep first
  // Minimal overgroups of rep, as element sets with their class ids.
  std::vector<ElementSet> min_over;
  std::vector<std::size_t> min_over_class;

  bool is_normal() const { return conjugates.size() == 1; }
};

// Conjugacy classes of subgroups by cyclic extension, sorted by order.
// Class 0 is the trivial subgroup and the last class is the whole group.
class SubgroupLattice {
public:
  explicit SubgroupLattice(const FiniteGroup &g);

  const FiniteGroup &group() const { return g_; }
  const std::vector<SubgroupClass> &classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  std::size_t class_of(const ElementSet &s) const;
  PermGroup subgroup(std::size_t k) const;
  std::size_t total_subgroups() const;
  // Some conjugate of class a lies inside the representative of class b.
  bool contained_up_to_conjugacy(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> normal_classes() const;

private:
  const FiniteGroup &g_;
  std::vector<SubgroupClass> classes_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
};

struct SubgroupNode {
  PermGroup subgroup;
  std::uint64_t index = 1;
  std::size_t class_id = 0;
  std::vector<std::size_t> minimal_overgroup_classes;
};

// One node per class, or one per subgroup when up_to_conjugacy is false.
std::vector<SubgroupNode> subgroup_lattice(const PermGroup &g, bool up_to_conjugacy);

std::vector<ElementSet> sylow_conjugates(const PermGroup &g, std::uint64_t p);
// Exact product set P1 P2 ... Pk, compared against G.
bool kaplan_levy_check(const PermGroup &g, const std::vector<PermGroup> &sylow_choice);
// Product check over every choice of Sylow subgroups, primes ascending.
bool kaplan_levy_all_choices(const PermGroup &g);

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup &g);
PermGroup socle(const PermGroup &g);

} // namespace alpharep
