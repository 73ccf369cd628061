#include "alpharep/actions.hpp"

#include <memory>

#include "alpharep/errors.hpp"
#include "alpharep/finite_group.hpp"
#include "alpharep/subgroups.hpp"

namespace alpharep {

namespace {

GroupAction finish(const PermGroup &g, std::size_t degree,
                   std::function<Permutation(const Permutation &)> act)
{
  GroupAction a{g, degree, {}, PermGroup::trivial(degree), 1, std::move(act), std::nullopt};
  for (const auto &s : g.generators())
    a.generator_images.push_back(a.act(s));
  a.image = PermGroup(a.generator_images, degree);
  a.kernel_order = g.order() / a.image.order();
  return a;
}

} // namespace

GroupAction natural_action(const PermGroup &g)
{
  return finish(g, g.degree(), [](const Permutation &x) { return x; });
}

GroupAction coset_action(const PermGroup &g, const PermGroup &h)
{
  if (!h.is_subgroup_of(g))
    throw InvalidArgument("coset_action: H is not a subgroup of G");
  const FiniteGroup &fg = g.enumerated();
  struct Data {
    std::vector<std::uint32_t> label;
    std::vector<FiniteGroup::Index> reps;
  };
  auto d = std::make_shared<Data>();
  ElementSet hs = element_set(fg, h);
  auto hm = members(hs);
  constexpr std::uint32_t none = static_cast<std::uint32_t>(-1);
  d->label.assign(fg.order(), none);
  for (FiniteGroup::Index x = 0; x < fg.order(); ++x) {
    if (d->label[x] != none)
      continue;
    auto id = static_cast<std::uint32_t>(d->reps.size());
    d->reps.push_back(x);
    for (auto y : hm)
      d->label[fg.mul(x, y)] = id;
  }
  std::size_t deg = d->reps.size();
  const FiniteGroup *fp = &fg;
  auto act = [d, fp, deg, g](const Permutation &x) {
    FiniteGroup::Index xi = fp->index_of(x);
    std::vector<Permutation::Point> img(deg);
    for (std::size_t i = 0; i < deg; ++i)
      img[i] = d->label[fp->mul(xi, d->reps[i])];
    return Permutation(std::move(img));
  };
  GroupAction a = finish(g, deg, act);
  a.point_stabilizer = h;
  return a;
}

std::vector<std::pair<std::size_t, std::size_t>> two_subsets(std::size_t n)
{
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.emplace_back(i, j);
  return out;
}

GroupAction two_subset_action(std::size_t n)
{
  if (n < 3)
    throw InvalidArgument("two_subset_action needs n >= 3");
  auto pairs = two_subsets(n);
  std::vector<std::vector<std::size_t>> idx(n, std::vector<std::size_t>(n, 0));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    idx[pairs[k].first][pairs[k].second] = k;
    idx[pairs[k].second][pairs[k].first] = k;
  }
  auto act = [pairs, idx](const Permutation &s) {
    std::vector<Permutation::Point> img(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
      img[k] = static_cast<Permutation::Point>(
          idx[s(static_cast<Permutation::Point>(pairs[k].first))]
             [s(static_cast<Permutation::Point>(pairs[k].second))]);
    return Permutation(std::move(img));
  };
  return finish(symmetric_group(n), pairs.size(), act);
}

PermGroup symmetric_group(std::size_t n)
{
  if (n == 1)
    return PermGroup::trivial(1).set_name("S1");
  std::vector<Permutation::Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i)
    cyc[i] = static_cast<Permutation::Point>(i + 1);
  PermGroup g({Permutation::from_cycles({cyc}, n), Permutation::from_cycles({{1, 2}}, n)}, n);
  return g.set_name("S" + std::to_string(n));
}

PermGroup alternating_group(std::size_t n)
{
  if (n < 3)
    return PermGroup::trivial(n).set_name("A" + std::to_string(n));
  std::vector<Permutation> gens{Permutation::from_cycles({{1, 2, 3}}, n)};
  // (1 2 3) with an (n-1)- or n-cycle that is even
  std::vector<Permutation::Point> cyc;
  if (n % 2) {
    for (std::size_t i = 0; i < n; ++i)
      cyc.push_back(static_cast<Permutation::Point>(i + 1));
  } else {
    for (std::size_t i = 1; i < n; ++i)
      cyc.push_back(static_cast<Permutation::Point>(i + 1));
  }
  gens.push_back(Permutation::from_cycles({cyc}, n));
  PermGroup g(gens, n);
  return g.set_name("A" + std::to_string(n));
}

PermGroup cyclic_group(std::size_t n)
{
  std::vector<Permutation::Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i)
    cyc[i] = static_cast<Permutation::Point>(i + 1);
  PermGroup g({Permutation::from_cycles({cyc}, n)}, n);
  return g.set_name("Z" + std::to_string(n));
}

} // namespace alpharep
