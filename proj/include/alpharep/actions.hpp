#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "alpharep/perm_group.hpp"

namespace alpharep {

// A homomorphism G -> Sym(degree) with its image.
struct GroupAction {
  PermGroup group;
  std::size_t degree = 1;
  std::vector<Permutation> generator_images;
  PermGroup image;
  std::uint64_t kernel_order = 1;
  std::function<Permutation(const Permutation &)> act;
  std::optional<PermGroup> point_stabilizer;

  bool faithful() const { return kernel_order == 1; }
  bool transitive() const { return image.is_transitive(); }
  std::size_t fixed_points(const Permutation &g) const { return act(g).fixed_points(); }
};

// G on its own points.
GroupAction natural_action(const PermGroup &g);
// G on the left cosets G/H; throws InvalidArgument unless H <= G.
GroupAction coset_action(const PermGroup &g, const PermGroup &h);
// S_n on unordered pairs, pairs in lexicographic order; n >= 3.
GroupAction two_subset_action(std::size_t n);
std::vector<std::pair<std::size_t, std::size_t>> two_subsets(std::size_t n);

PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);

} // namespace alpharep
