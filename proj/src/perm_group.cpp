#include "alpharep/perm_group.hpp"

#include <mutex>

#include "alpharep/errors.hpp"
#include "alpharep/finite_group.hpp"
#include "alpharep/rational.hpp"

namespace alpharep {

Bounds &bounds()
{
  static Bounds b;
  return b;
}

namespace {

using Point = Permutation::Point;

struct Level {
  Point base = 0;
  std::vector<Permutation> gens;
  std::vector<int> where; // point -> orbit index, or -1
  std::vector<Point> orbit;
  std::vector<Permutation> trans; // trans[i](base) == orbit[i]
  std::vector<Permutation> trans_inv;
};

Point first_moved(const Permutation &g)
{
  for (Point x = 0; x < g.degree(); ++x)
    if (g(x) != x)
      return x;
  return 0;
}

} // namespace

struct PermGroup::Impl {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::vector<Level> chain;
  std::uint64_t order = 1;

  std::once_flag fin_once;
  std::shared_ptr<FiniteGroup> fin;

  void orbit(Level &lv) const
  {
    lv.where.assign(degree, -1);
    lv.orbit.assign(1, lv.base);
    lv.trans.assign(1, Permutation(degree));
    lv.trans_inv.assign(1, Permutation(degree));
    lv.where[lv.base] = 0;
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      Point b = lv.orbit[i];
      for (const auto &s : lv.gens) {
        Point c = s(b);
        if (lv.where[c] >= 0)
          continue;
        lv.where[c] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(c);
        Permutation u = s * lv.trans[i];
        lv.trans_inv.push_back(u.inverse());
        lv.trans.push_back(std::move(u));
      }
    }
  }

  // Returns the residue and the level where sifting stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const
  {
    for (std::size_t l = from; l < chain.size(); ++l) {
      const Level &lv = chain[l];
      int idx = lv.where[g(lv.base)];
      if (idx < 0)
        return {g, l};
      g = lv.trans_inv[idx] * g;
    }
    return {g, chain.size()};
  }

  void build()
  {
    for (const auto &g : gens) {
      if (g.is_identity())
        continue;
      if (chain.empty()) {
        chain.emplace_back();
        chain[0].base = first_moved(g);
      }
      chain[0].gens.push_back(g);
    }
    if (chain.empty())
      return;
    long i = static_cast<long>(chain.size()) - 1;
    while (i >= 0) {
      Level &lv = chain[i];
      orbit(lv);
      bool clean = true;
      for (std::size_t k = 0; clean && k < lv.orbit.size(); ++k) {
        for (std::size_t si = 0; si < lv.gens.size(); ++si) {
          const Permutation &s = lv.gens[si];
          Point img = s(lv.orbit[k]);
          Permutation sch = chain[i].trans_inv[chain[i].where[img]] * s * chain[i].trans[k];
          if (sch.is_identity())
            continue;
          auto [h, j] = strip(sch, static_cast<std::size_t>(i) + 1);
          if (h.is_identity())
            continue;
          if (j == chain.size()) {
            chain.emplace_back();
            chain.back().base = first_moved(h);
          }
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l)
            chain[l].gens.push_back(h);
          i = static_cast<long>(j);
          clean = false;
          break;
        }
      }
      if (clean)
        --i;
    }
    unsigned __int128 o = 1;
    for (auto &lv : chain) {
      o *= lv.orbit.size();
      if (o > UINT64_MAX)
        throw BoundExceeded("group order does not fit in 64 bits");
    }
    order = static_cast<std::uint64_t>(o);
  }
};

PermGroup::PermGroup() : PermGroup(std::vector<Permutation>{}, 1) {}

PermGroup::PermGroup(std::vector<Permutation> gens, std::size_t degree)
    : d_(std::make_shared<Impl>())
{
  if (!gens.empty())
    degree = gens[0].degree();
  if (degree == 0)
    throw InvalidArgument("group of degree 0");
  for (const auto &g : gens)
    if (g.degree() != degree)
      throw InvalidArgument("generators have different degrees");
  d_->degree = degree;
  d_->gens = std::move(gens);
  d_->build();
}

PermGroup PermGroup::trivial(std::size_t degree)
{
  return PermGroup({}, degree);
}

std::size_t PermGroup::degree() const { return d_->degree; }
const std::string &PermGroup::name() const { return name_; }
PermGroup &PermGroup::set_name(std::string n)
{
  name_ = std::move(n);
  return *this;
}
const std::vector<Permutation> &PermGroup::generators() const { return d_->gens; }
std::uint64_t PermGroup::order() const { return d_->order; }

bool PermGroup::contains(const Permutation &g) const
{
  if (g.degree() != d_->degree)
    return false;
  auto [h, j] = d_->strip(g, 0);
  return j == d_->chain.size() && h.is_identity();
}

bool PermGroup::is_abelian() const
{
  const auto &g = d_->gens;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g[i] * g[j] != g[j] * g[i])
        return false;
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup &g) const
{
  if (g.degree() != degree())
    return false;
  for (const auto &x : d_->gens)
    if (!g.contains(x))
      return false;
  return true;
}

bool PermGroup::is_normal_in(const PermGroup &g) const
{
  if (!is_subgroup_of(g))
    return false;
  for (const auto &x : g.generators())
    if (!normalizes(x, *this))
      return false;
  return true;
}

void PermGroup::for_each_element(const std::function<bool(const Permutation &)> &f) const
{
  const auto &chain = d_->chain;
  std::size_t L = chain.size();
  if (L == 0) {
    f(Permutation(d_->degree));
    return;
  }
  std::vector<std::size_t> idx(L, 0);
  std::vector<Permutation> prefix(L);
  prefix[0] = chain[0].trans[0];
  for (std::size_t l = 1; l < L; ++l)
    prefix[l] = prefix[l - 1] * chain[l].trans[0];
  for (;;) {
    if (!f(prefix[L - 1]))
      return;
    // odometer, last level fastest
    std::size_t l = L;
    while (l > 0) {
      --l;
      if (++idx[l] < chain[l].trans.size())
        break;
      idx[l] = 0;
      if (l == 0)
        return;
    }
    prefix[l] = l == 0 ? chain[0].trans[idx[0]] : prefix[l - 1] * chain[l].trans[idx[l]];
    for (std::size_t m = l + 1; m < L; ++m)
      prefix[m] = prefix[m - 1] * chain[m].trans[idx[m]];
  }
}

std::vector<Permutation> PermGroup::elements() const
{
  if (order() > bounds().elements)
    throw BoundExceeded("group order " + std::to_string(order()) +
                        " exceeds element bound " + std::to_string(bounds().elements));
  std::vector<Permutation> out;
  out.reserve(order());
  for_each_element([&](const Permutation &g) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::vector<std::size_t> PermGroup::base() const
{
  std::vector<std::size_t> b;
  for (const auto &lv : d_->chain)
    b.push_back(lv.base);
  return b;
}

std::vector<std::size_t> PermGroup::orbit(std::size_t point) const
{
  std::vector<bool> seen(degree(), false);
  std::vector<std::size_t> orb{point};
  seen[point] = true;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const auto &s : d_->gens) {
      std::size_t c = s(static_cast<Point>(orb[i]));
      if (!seen[c]) {
        seen[c] = true;
        orb.push_back(c);
      }
    }
  return orb;
}

bool PermGroup::is_transitive() const
{
  return orbit(0).size() == degree();
}

const FiniteGroup &PermGroup::enumerated() const
{
  std::call_once(d_->fin_once, [this] { d_->fin = std::make_shared<FiniteGroup>(*this); });
  return *d_->fin;
}

PermGroup extend(const PermGroup &h, const Permutation &g)
{
  if (h.contains(g))
    return h;
  auto gens = h.generators();
  gens.push_back(g);
  return PermGroup(std::move(gens), h.degree());
}

PermGroup conjugate(const PermGroup &h, const Permutation &x)
{
  std::vector<Permutation> gens;
  for (const auto &g : h.generators())
    gens.push_back(conjugate(g, x));
  return PermGroup(std::move(gens), h.degree());
}

bool normalizes(const Permutation &g, const PermGroup &h)
{
  for (const auto &x : h.generators())
    if (!h.contains(conjugate(x, g)))
      return false;
  return true;
}

bool equal_groups(const PermGroup &a, const PermGroup &b)
{
  return a.order() == b.order() && a.is_subgroup_of(b);
}

PermGroup normal_closure(const PermGroup &g, const std::vector<Permutation> &xs)
{
  std::vector<Permutation> gens;
  for (const auto &x : xs)
    if (!x.is_identity())
      gens.push_back(x);
  PermGroup n(gens, g.degree());
  bool grown = true;
  while (grown) {
    grown = false;
    for (std::size_t i = 0; i < n.generators().size() && !grown; ++i)
      for (const auto &s : g.generators()) {
        Permutation c = conjugate(n.generators()[i], s);
        if (!n.contains(c)) {
          n = extend(n, c);
          grown = true;
          break;
        }
      }
  }
  return n;
}

PermGroup derived_subgroup(const PermGroup &g)
{
  std::vector<Permutation> comms;
  const auto &gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      Permutation c = gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j];
      if (!c.is_identity())
        comms.push_back(c);
    }
  return normal_closure(g, comms);
}

std::vector<PermGroup> derived_series(const PermGroup &g)
{
  std::vector<PermGroup> s{g};
  for (;;) {
    PermGroup d = derived_subgroup(s.back());
    if (d.order() == s.back().order())
      return s;
    s.push_back(d);
  }
}

bool is_solvable(const PermGroup &g)
{
  return derived_series(g).back().is_trivial();
}

PermGroup sylow_subgroup(const PermGroup &g, std::uint64_t p)
{
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
  std::uint64_t target = p_part(g.order(), p);
  PermGroup P = PermGroup::trivial(g.degree());
  while (P.order() < target) {
    bool grown = false;
    g.for_each_element([&](const Permutation &x) {
      std::uint64_t o = x.order();
      if (o % p)
        return true;
      Permutation h = x.pow(static_cast<long>(o / p_part(o, p)));
      if (P.contains(h) || !normalizes(h, P))
        return true;
      P = extend(P, h);
      grown = true;
      return false;
    });
    if (!grown)
      throw DataError("Sylow search stalled below the p-part");
  }
  return P;
}

PermGroup direct_product(const PermGroup &a, const PermGroup &b)
{
  std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto &g : a.generators())
    gens.push_back(embed(g, n, 0));
  for (const auto &g : b.generators())
    gens.push_back(embed(g, n, a.degree()));
  return PermGroup(std::move(gens), n);
}

std::uint64_t exponent(const PermGroup &g)
{
  std::uint64_t e = 1;
  g.for_each_element([&](const Permutation &x) {
    e = lcm_u64(e, x.order());
    return true;
  });
  return e;
}

} // namespace alpharep
