#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "alpharep/perm_group.hpp"

namespace alpharep {

class SubgroupLattice;

struct ConjugacyClassSet {
  std::uint64_t group_order = 1;
  std::vector<Permutation> representatives;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> orders;
  // prime q -> class index of rep^q, for every prime q up to the largest order
  std::map<std::uint64_t, std::vector<std::size_t>> power_map;

  std::size_t size() const { return sizes.size(); }
};

// All elements of a permutation group, indexed, with conjugacy classes.
// Classes are ordered by element order, then size; the identity is class 0.
class FiniteGroup {
public:
  using Index = std::uint32_t;

  explicit FiniteGroup(const PermGroup &g);
  ~FiniteGroup();

  const PermGroup &group() const { return g_; }
  std::size_t order() const { return elts_.size(); }
  const Permutation &element(Index i) const { return elts_[i]; }
  const std::vector<Permutation> &elements() const { return elts_; }
  std::optional<Index> find(const Permutation &p) const;
  // Throws InvalidArgument when p is not a member.
  Index index_of(const Permutation &p) const;
  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inv_[a]; }
  std::uint64_t element_order(Index a) const { return ord_[a]; }
  const std::vector<Index> &generator_indices() const { return gens_; }
  std::uint64_t exponent() const;

  std::size_t class_count() const { return reps_.size(); }
  std::size_t class_of(Index a) const { return cls_[a]; }
  Index class_rep(std::size_t k) const { return reps_[k]; }
  std::uint64_t class_size(std::size_t k) const { return members_[k].size(); }
  const std::vector<Index> &class_members(std::size_t k) const { return members_[k]; }
  std::uint64_t class_order(std::size_t k) const { return ord_[reps_[k]]; }
  std::size_t power_class(std::size_t k, long e) const;
  std::size_t inverse_class(std::size_t k) const { return cls_[inv_[reps_[k]]]; }
  const ConjugacyClassSet &classes() const { return ccs_; }

  // Multiplication table, built on first use when the order allows it.
  bool ensure_table() const;

  // Subgroup classes (cyclic extension), built once.
  const SubgroupLattice &lattice() const;

private:
  void build_index();
  void build_classes();

  PermGroup g_;
  std::vector<Permutation> elts_;
  std::vector<Index> slots_; // open addressing, value+1, 0 = empty
  std::vector<Index> inv_;
  std::vector<std::uint64_t> ord_;
  std::vector<Index> gens_;
  std::vector<std::size_t> cls_;
  std::vector<Index> reps_;
  std::vector<std::vector<Index>> members_;
  ConjugacyClassSet ccs_;

  mutable std::once_flag table_once_;
  mutable std::vector<std::uint32_t> table_;

  mutable std::once_flag lattice_once_;
  mutable std::shared_ptr<SubgroupLattice> lattice_;
};

// Spec-level entry points.
ConjugacyClassSet conjugacy_classes(const PermGroup &g);
// Class index of g in G; throws InvalidArgument when g is not in G.
std::size_t class_of(const PermGroup &g, const Permutation &x);

} // namespace alpharep
