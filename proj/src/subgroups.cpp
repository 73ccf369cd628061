#include "alpharep/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "alpharep/errors.hpp"
#include "alpharep/rational.hpp"

namespace alpharep {

using Index = FiniteGroup::Index;

std::size_t ElementSetHash::operator()(const ElementSet &s) const
{
  std::vector<ElementSet::block_type> blocks;
  blocks.reserve(s.num_blocks());
  boost::to_block_range(s, std::back_inserter(blocks));
  std::size_t h = 0x9e3779b97f4a7c15ull ^ s.size();
  for (auto b : blocks) {
    h ^= static_cast<std::size_t>(b) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

ElementSet closure(const FiniteGroup &g, const std::vector<Index> &gens)
{
  ElementSet s(g.order());
  std::vector<Index> list{0};
  s.set(0);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Index x : gens) {
      Index y = g.mul(list[i], x);
      if (!s.test(y)) {
        s.set(y);
        list.push_back(y);
      }
    }
  return s;
}

ElementSet element_set(const FiniteGroup &g, const PermGroup &h)
{
  std::vector<Index> gens;
  for (const auto &x : h.generators())
    gens.push_back(g.index_of(x));
  return closure(g, gens);
}

std::vector<Index> members(const ElementSet &s)
{
  std::vector<Index> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.push_back(static_cast<Index>(i));
  return out;
}

PermGroup to_perm_group(const FiniteGroup &g, const ElementSet &s)
{
  // greedy generating set
  std::vector<Index> gens;
  ElementSet cur(g.order());
  cur.set(0);
  for (Index x : members(s)) {
    if (cur.test(x))
      continue;
    gens.push_back(x);
    cur = closure(g, gens);
    if (cur.count() == s.count())
      break;
  }
  std::vector<Permutation> pg;
  for (Index x : gens)
    pg.push_back(g.element(x));
  return PermGroup(std::move(pg), g.group().degree());
}

ElementSet conjugate_set(const FiniteGroup &g, const ElementSet &s, Index x)
{
  ElementSet out(g.order());
  Index xi = g.inv(x);
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.set(g.mul(g.mul(x, static_cast<Index>(i)), xi));
  return out;
}

SubgroupLattice::SubgroupLattice(const FiniteGroup &g) : g_(g)
{
  g.ensure_table();
  std::size_t n = g.order();

  // prime-power cyclic subgroups, one generator each
  std::vector<Index> cyc_gens;
  std::vector<ElementSet> cyc_sets;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (Index x = 1; x < n; ++x) {
      if (prime_power(g.element_order(x)).first == 0)
        continue;
      ElementSet c = closure(g, {x});
      if (seen.insert(c).second) {
        cyc_gens.push_back(x);
        cyc_sets.push_back(std::move(c));
      }
    }
  }

  std::vector<SubgroupClass> raw;
  auto add_class = [&](ElementSet rep, std::vector<Index> gens) {
    SubgroupClass c;
    c.order = rep.count();
    c.index = n / c.order;
    c.gens = std::move(gens);
    c.conjugates.push_back(rep);
    std::size_t id = raw.size();
    lookup_.emplace(rep, id);
    for (std::size_t i = 0; i < c.conjugates.size(); ++i)
      for (Index s : g.generator_indices()) {
        ElementSet d = conjugate_set(g, c.conjugates[i], s);
        if (lookup_.emplace(d, id).second)
          c.conjugates.push_back(std::move(d));
      }
    c.rep = std::move(rep);
    raw.push_back(std::move(c));
    return id;
  };

  ElementSet triv(n);
  triv.set(0);
  add_class(triv, {});
  for (std::size_t k = 0; k < raw.size(); ++k) {
    std::unordered_set<ElementSet, ElementSetHash> over;
    for (std::size_t z = 0; z < cyc_gens.size(); ++z) {
      if (cyc_sets[z].is_subset_of(raw[k].rep))
        continue;
      std::vector<Index> gens = raw[k].gens;
      gens.push_back(cyc_gens[z]);
      ElementSet kk = closure(g, gens);
      if (!over.insert(kk).second)
        continue;
      if (!lookup_.count(kk))
        add_class(kk, gens);
    }
    std::vector<ElementSet> all(over.begin(), over.end());
    for (const auto &a : all) {
      bool minimal = true;
      for (const auto &b : all)
        if (b != a && b.is_proper_subset_of(a)) {
          minimal = false;
          break;
        }
      if (minimal) {
        raw[k].min_over.push_back(a);
        raw[k].min_over_class.push_back(lookup_.at(a));
      }
    }
  }

  // sort by order, keeping discovery order within an order
  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return raw[a].order < raw[b].order; });
  std::vector<std::size_t> rank(raw.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    rank[perm[i]] = i;
  for (auto &kv : lookup_)
    kv.second = rank[kv.second];
  for (std::size_t i = 0; i < perm.size(); ++i) {
    classes_.push_back(std::move(raw[perm[i]]));
    for (auto &c : classes_.back().min_over_class)
      c = rank[c];
  }
  // deterministic order of minimal overgroups
  for (auto &c : classes_) {
    std::vector<std::size_t> ord(c.min_over.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
      if (c.min_over_class[a] != c.min_over_class[b])
        return c.min_over_class[a] < c.min_over_class[b];
      return members(c.min_over[a]) < members(c.min_over[b]);
    });
    std::vector<ElementSet> mo;
    std::vector<std::size_t> mc;
    for (auto i : ord) {
      mo.push_back(c.min_over[i]);
      mc.push_back(c.min_over_class[i]);
    }
    c.min_over = std::move(mo);
    c.min_over_class = std::move(mc);
  }
}

std::size_t SubgroupLattice::class_of(const ElementSet &s) const
{
  auto it = lookup_.find(s);
  if (it == lookup_.end())
    throw InvalidArgument("element set is not a subgroup");
  return it->second;
}

PermGroup SubgroupLattice::subgroup(std::size_t k) const
{
  std::vector<Permutation> gens;
  for (Index x : classes_[k].gens)
    gens.push_back(g_.element(x));
  return PermGroup(std::move(gens), g_.group().degree());
}

std::size_t SubgroupLattice::total_subgroups() const
{
  std::size_t t = 0;
  for (const auto &c : classes_)
    t += c.conjugates.size();
  return t;
}

bool SubgroupLattice::contained_up_to_conjugacy(std::size_t a, std::size_t b) const
{
  if (classes_[a].order > classes_[b].order || classes_[b].order % classes_[a].order)
    return false;
  for (const auto &c : classes_[a].conjugates)
    if (c.is_subset_of(classes_[b].rep))
      return true;
  return false;
}

std::vector<std::size_t> SubgroupLattice::normal_classes() const
{
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < classes_.size(); ++k)
    if (classes_[k].is_normal())
      out.push_back(k);
  return out;
}

std::vector<SubgroupNode> subgroup_lattice(const PermGroup &g, bool up_to_conjugacy)
{
  const FiniteGroup &fg = g.enumerated();
  const SubgroupLattice &lat = fg.lattice();
  std::vector<SubgroupNode> out;
  for (std::size_t k = 0; k < lat.size(); ++k) {
    const auto &c = lat.classes()[k];
    std::vector<std::size_t> mo = c.min_over_class;
    mo.erase(std::unique(mo.begin(), mo.end()), mo.end());
    if (up_to_conjugacy) {
      out.push_back({lat.subgroup(k), c.index, k, mo});
      continue;
    }
    for (const auto &s : c.conjugates)
      out.push_back({to_perm_group(fg, s), c.index, k, mo});
  }
  return out;
}

std::vector<ElementSet> sylow_conjugates(const PermGroup &g, std::uint64_t p)
{
  const FiniteGroup &fg = g.enumerated();
  ElementSet base = element_set(fg, sylow_subgroup(g, p));
  std::vector<ElementSet> out{base};
  std::unordered_set<ElementSet, ElementSetHash> seen{base};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Index s : fg.generator_indices()) {
      ElementSet c = conjugate_set(fg, out[i], s);
      if (seen.insert(c).second)
        out.push_back(std::move(c));
    }
  return out;
}

namespace {

bool product_is_group(const FiniteGroup &fg, const std::vector<const ElementSet *> &ps)
{
  ElementSet cur = *ps[0];
  for (std::size_t i = 1; i < ps.size(); ++i) {
    ElementSet next(fg.order());
    auto pm = members(*ps[i]);
    for (auto s = cur.find_first(); s != ElementSet::npos; s = cur.find_next(s))
      for (Index x : pm)
        next.set(fg.mul(static_cast<Index>(s), x));
    cur = std::move(next);
  }
  return cur.count() == fg.order();
}

} // namespace

bool kaplan_levy_check(const PermGroup &g, const std::vector<PermGroup> &sylow_choice)
{
  auto primes = prime_divisors(g.order());
  if (primes.empty())
    return true;
  if (sylow_choice.size() != primes.size())
    throw InvalidArgument("need one Sylow subgroup per prime divisor");
  const FiniteGroup &fg = g.enumerated();
  std::vector<ElementSet> sets(primes.size());
  std::vector<bool> have(primes.size(), false);
  for (const auto &P : sylow_choice) {
    if (!P.is_subgroup_of(g))
      throw InvalidArgument("Sylow choice is not a subgroup");
    auto pp = prime_power(P.order());
    auto it = std::find(primes.begin(), primes.end(), pp.first);
    if (it == primes.end() || P.order() != p_part(g.order(), pp.first))
      throw InvalidArgument("subgroup of order " + std::to_string(P.order()) +
                            " is not a Sylow subgroup");
    std::size_t i = static_cast<std::size_t>(it - primes.begin());
    if (have[i])
      throw InvalidArgument("two subgroups for the same prime");
    have[i] = true;
    sets[i] = element_set(fg, P);
  }
  std::vector<const ElementSet *> ps;
  for (auto &s : sets)
    ps.push_back(&s);
  return product_is_group(fg, ps);
}

bool kaplan_levy_all_choices(const PermGroup &g)
{
  auto primes = prime_divisors(g.order());
  if (primes.size() <= 1)
    return true;
  const FiniteGroup &fg = g.enumerated();
  fg.ensure_table();
  std::vector<std::vector<ElementSet>> all;
  for (auto p : primes)
    all.push_back(sylow_conjugates(g, p));
  std::vector<std::size_t> idx(all.size(), 0);
  for (;;) {
    std::vector<const ElementSet *> ps;
    for (std::size_t i = 0; i < all.size(); ++i)
      ps.push_back(&all[i][idx[i]]);
    if (!product_is_group(fg, ps))
      return false;
    std::size_t l = all.size();
    while (l > 0) {
      --l;
      if (++idx[l] < all[l].size())
        break;
      idx[l] = 0;
      if (l == 0)
        return true;
    }
  }
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup &g)
{
  const FiniteGroup &fg = g.enumerated();
  const SubgroupLattice &lat = fg.lattice();
  auto normal = lat.normal_classes();
  std::vector<PermGroup> out;
  for (auto k : normal) {
    if (k == 0)
      continue;
    bool minimal = true;
    for (auto m : normal)
      if (m != 0 && m != k && lat.classes()[m].rep.is_proper_subset_of(lat.classes()[k].rep)) {
        minimal = false;
        break;
      }
    if (minimal)
      out.push_back(lat.subgroup(k));
  }
  return out;
}

PermGroup socle(const PermGroup &g)
{
  std::vector<Permutation> gens;
  for (const auto &n : minimal_normal_subgroups(g))
    for (const auto &x : n.generators())
      gens.push_back(x);
  return PermGroup(std::move(gens), g.degree());
}

} // namespace alpharep
