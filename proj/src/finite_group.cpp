#include "alpharep/finite_group.hpp"

#include <algorithm>
#include <numeric>

#include "alpharep/errors.hpp"
#include "alpharep/rational.hpp"
#include "alpharep/subgroups.hpp"

namespace alpharep {

FiniteGroup::FiniteGroup(const PermGroup &g) : g_(g)
{
  elts_ = g.elements();
  build_index();
  inv_.resize(elts_.size());
  ord_.resize(elts_.size());
  for (Index i = 0; i < elts_.size(); ++i) {
    inv_[i] = index_of(elts_[i].inverse());
    ord_[i] = elts_[i].order();
  }
  for (const auto &s : g.generators())
    gens_.push_back(index_of(s));
  build_classes();
}

FiniteGroup::~FiniteGroup() = default;

void FiniteGroup::build_index()
{
  std::size_t cap = 1;
  while (cap < 2 * elts_.size() + 1)
    cap <<= 1;
  slots_.assign(cap, 0);
  PermutationHash h;
  for (Index i = 0; i < elts_.size(); ++i) {
    std::size_t s = h(elts_[i]) & (cap - 1);
    while (slots_[s])
      s = (s + 1) & (cap - 1);
    slots_[s] = i + 1;
  }
}

std::optional<FiniteGroup::Index> FiniteGroup::find(const Permutation &p) const
{
  if (p.degree() != g_.degree())
    return std::nullopt;
  std::size_t cap = slots_.size();
  std::size_t s = PermutationHash{}(p) & (cap - 1);
  while (slots_[s]) {
    Index i = slots_[s] - 1;
    if (elts_[i] == p)
      return i;
    s = (s + 1) & (cap - 1);
  }
  return std::nullopt;
}

FiniteGroup::Index FiniteGroup::index_of(const Permutation &p) const
{
  auto i = find(p);
  if (!i)
    throw InvalidArgument("permutation " + p.str() + " is not a group element");
  return *i;
}

FiniteGroup::Index FiniteGroup::mul(Index a, Index b) const
{
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * elts_.size() + b];
  return index_of(elts_[a] * elts_[b]);
}

bool FiniteGroup::ensure_table() const
{
  std::size_t n = elts_.size();
  if (n > std::max<std::uint64_t>(bounds().lattice, 2600))
    return false;
  std::call_once(table_once_, [&] {
    std::vector<std::uint32_t> t(n * n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        t[static_cast<std::size_t>(a) * n + b] = index_of(elts_[a] * elts_[b]);
    table_ = std::move(t);
  });
  return true;
}

std::uint64_t FiniteGroup::exponent() const
{
  std::uint64_t e = 1;
  for (auto o : ord_)
    e = lcm_u64(e, o);
  return e;
}

void FiniteGroup::build_classes()
{
  std::size_t n = elts_.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw(n, none);
  std::vector<std::vector<Index>> orbits;
  std::vector<Permutation> ginv;
  for (const auto &s : g_.generators())
    ginv.push_back(s.inverse());
  for (Index x = 0; x < n; ++x) {
    if (raw[x] != none)
      continue;
    std::size_t id = orbits.size();
    orbits.push_back({x});
    raw[x] = id;
    auto &orb = orbits.back();
    for (std::size_t i = 0; i < orb.size(); ++i) {
      const Permutation &y = elts_[orb[i]];
      for (std::size_t k = 0; k < ginv.size(); ++k) {
        Index c = index_of(g_.generators()[k] * y * ginv[k]);
        if (raw[c] == none) {
          raw[c] = id;
          orb.push_back(c);
        }
      }
    }
  }
  std::vector<std::size_t> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    auto oa = ord_[orbits[a][0]], ob = ord_[orbits[b][0]];
    if (oa != ob)
      return oa < ob;
    return orbits[a].size() < orbits[b].size();
  });
  std::vector<std::size_t> rank(orbits.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    rank[perm[i]] = i;
  cls_.resize(n);
  for (Index x = 0; x < n; ++x)
    cls_[x] = rank[raw[x]];
  members_.resize(orbits.size());
  reps_.resize(orbits.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    members_[i] = std::move(orbits[perm[i]]);
    std::sort(members_[i].begin(), members_[i].end());
    reps_[i] = members_[i][0];
  }

  ccs_.group_order = n;
  std::uint64_t maxord = 1;
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    ccs_.representatives.push_back(elts_[reps_[k]]);
    ccs_.sizes.push_back(members_[k].size());
    ccs_.orders.push_back(ord_[reps_[k]]);
    maxord = std::max(maxord, ord_[reps_[k]]);
  }
  for (std::uint64_t q = 2; q <= maxord; ++q) {
    if (!is_prime(q))
      continue;
    auto &pm = ccs_.power_map[q];
    for (std::size_t k = 0; k < reps_.size(); ++k)
      pm.push_back(power_class(k, static_cast<long>(q)));
  }
}

std::size_t FiniteGroup::power_class(std::size_t k, long e) const
{
  return cls_[index_of(elts_[reps_[k]].pow(e))];
}

const SubgroupLattice &FiniteGroup::lattice() const
{
  std::call_once(lattice_once_, [&] {
    if (order() > bounds().lattice)
      throw BoundExceeded("group order " + std::to_string(order()) +
                          " exceeds lattice bound " + std::to_string(bounds().lattice));
    lattice_ = std::make_shared<SubgroupLattice>(*this);
  });
  return *lattice_;
}

ConjugacyClassSet conjugacy_classes(const PermGroup &g)
{
  return g.enumerated().classes();
}

std::size_t class_of(const PermGroup &g, const Permutation &x)
{
  const FiniteGroup &fg = g.enumerated();
  return fg.class_of(fg.index_of(x));
}

} // namespace alpharep
