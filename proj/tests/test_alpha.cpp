#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "alpharep/actions.hpp"
#include "alpharep/alpha.hpp"
#include "alpharep/corpus.hpp"
#include "alpharep/dixon.hpp"
#include "alpharep/finite_group.hpp"
#include "alpharep/group_io.hpp"
#include "alpharep/rational.hpp"
#include "alpharep/subgroups.hpp"
#include "alpharep/table_io.hpp"

using namespace alpharep;

namespace {

using Idx = FiniteGroup::Index;
using Subgroup = std::vector<Idx>; // sorted element indices

PermGroup bundled(const std::string &file) { return load_group(default_data_dir() + "/groups/" + file); }

Subgroup close_under(const FiniteGroup &g, std::vector<Idx> gens)
{
  std::set<Idx> seen{g.index_of(Permutation(g.group().degree()))};
  std::vector<Idx> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    Idx x = todo.back();
    todo.pop_back();
    for (Idx s : gens) {
      Idx y = g.mul(x, s);
      if (seen.insert(y).second)
        todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

// Every subgroup, by adjoining one element at a time to known subgroups.
std::vector<Subgroup> all_subgroups(const FiniteGroup &g)
{
  std::set<Subgroup> found;
  std::vector<Subgroup> todo{close_under(g, {})};
  found.insert(todo.front());
  while (!todo.empty()) {
    Subgroup h = todo.back();
    todo.pop_back();
    std::vector<bool> in(g.order(), false);
    for (Idx x : h)
      in[x] = true;
    for (Idx x = 0; x < g.order(); ++x) {
      if (in[x])
        continue;
      std::vector<Idx> gens(h.begin(), h.end());
      gens.push_back(x);
      Subgroup k = close_under(g, gens);
      if (found.insert(k).second)
        todo.push_back(k);
    }
  }
  return {found.begin(), found.end()};
}

struct Oracle {
  const FiniteGroup &g;
  std::vector<std::size_t> column; // element index -> table column
  std::vector<Subgroup> subgroups;

  Oracle(const TablePtr &t) : g(t->group->enumerated())
  {
    column = t->locator->locate(g.elements());
    subgroups = all_subgroups(g);
  }

  std::int64_t fixed_dim(const ClassFunction &chi, const Subgroup &h) const
  {
    Cyclotomic s;
    for (Idx x : h)
      s += chi[column[x]];
    return to_rational_integer(s / Cyclotomic(static_cast<long>(h.size())));
  }

  // gcd of [G:H] over subgroups with nonzero fixed vectors.
  std::uint64_t alpha(const ClassFunction &chi) const
  {
    std::uint64_t a = 0;
    for (const auto &h : subgroups)
      if (fixed_dim(chi, h) > 0)
        a = gcd_u64(a, g.order() / h.size());
    return a;
  }

  // Isotropy subgroups: strictly more fixed vectors than every proper overgroup.
  std::vector<Subgroup> isotropy(const ClassFunction &chi) const
  {
    std::vector<Subgroup> out;
    for (const auto &h : subgroups) {
      auto d = fixed_dim(chi, h);
      if (d == 0)
        continue;
      bool strict = true;
      for (const auto &k : subgroups)
        if (k.size() > h.size() && std::includes(k.begin(), k.end(), h.begin(), h.end()) &&
            fixed_dim(chi, k) == d) {
          strict = false;
          break;
        }
      if (strict)
        out.push_back(h);
    }
    return out;
  }

  std::set<Subgroup> conjugacy_representatives(const std::vector<Subgroup> &hs) const
  {
    std::set<Subgroup> reps;
    for (const auto &h : hs) {
      Subgroup best = h;
      for (Idx x = 0; x < g.order(); ++x) {
        Subgroup c;
        for (Idx y : h)
          c.push_back(g.mul(g.mul(g.inv(x), y), x));
        std::sort(c.begin(), c.end());
        best = std::min(best, c);
      }
      reps.insert(best);
    }
    return reps;
  }
};

std::multiset<std::uint64_t> alphas_of(const TablePtr &t)
{
  std::multiset<std::uint64_t> out;
  for (std::size_t i = 0; i < t->irreducible_count(); ++i)
    out.insert(alpha(t->irreducible(i)).alpha);
  return out;
}

std::size_t genuine_count(const OrbitTypeLattice &l)
{
  return static_cast<std::size_t>(
      std::count_if(l.nodes.begin(), l.nodes.end(), [](const auto &n) { return n.genuine; }));
}

std::set<std::string> genuine_names(const OrbitTypeLattice &l)
{
  std::set<std::string> out;
  for (const auto &n : l.nodes)
    if (n.genuine)
      out.insert(n.name);
  return out;
}

} // namespace

TEST_CASE("alpha agrees with the subgroup enumeration oracle")
{
  for (std::string file : {"s3.grp", "z6.grp", "a4.grp", "q8.grp", "d8.grp", "s4.grp",
                           "sl2_3.grp", "f20.grp", "es27.grp", "q8xz3.grp", "a5.grp"}) {
    CAPTURE(file);
    auto t = compute_table_dixon(bundled(file));
    Oracle o(t);
    for (std::size_t i = 0; i < t->irreducible_count(); ++i) {
      CAPTURE(i);
      auto chi = t->irreducible(i);
      auto rep = alpha(chi);
      CHECK(rep.alpha == o.alpha(chi));
      auto lat = orbit_types(chi);
      auto iso = o.isotropy(chi);
      CHECK(genuine_count(lat) == o.conjugacy_representatives(iso).size());
      std::uint64_t gi = 0;
      for (const auto &h : iso)
        gi = gcd_u64(gi, t->order / h.size());
      CHECK(lat.gcd_index == gi);
      CHECK(gi == rep.alpha);
      std::uint64_t product = 1;
      for (const auto &l : rep.local)
        product *= l.value;
      CHECK(product == rep.alpha);
    }
  }
}

TEST_CASE("published alpha values")
{
  CHECK(alphas_of(compute_table_dixon(bundled("a5.grp"))) ==
        std::multiset<std::uint64_t>{1, 2, 2, 5, 1});
  CHECK(alphas_of(compute_table_dixon(bundled("s5.grp"))) ==
        std::multiset<std::uint64_t>{1, 2, 10, 1, 2, 1, 5});
  CHECK(alphas_of(compute_table_dixon(bundled("psl2_8.grp"))) ==
        std::multiset<std::uint64_t>{1, 2, 2, 2, 2, 3, 1, 1, 1});
  auto q8 = alphas_of(compute_table_dixon(bundled("q8.grp")));
  auto d8 = alphas_of(compute_table_dixon(bundled("d8.grp")));
  CHECK(q8.count(8) == 1);
  CHECK(d8.count(4) == 1);
  CHECK(q8 != d8);
}

TEST_CASE("A5 orbit types")
{
  auto t = compute_table_dixon(bundled("a5.grp"));
  std::map<std::int64_t, std::set<std::string>> want{
      {3, {"Z5", "Z3", "Z2", "Z1"}},
      {4, {"A4", "D3", "Z3", "Z2", "Z1"}},
      {5, {"D5", "D3", "V4", "Z2", "Z1"}}};
  for (std::size_t i = 1; i < t->irreducible_count(); ++i) {
    auto chi = t->irreducible(i);
    auto l = orbit_types(chi);
    CHECK(genuine_names(l) == want.at(to_rational_integer(chi.degree())));
    CHECK_FALSE(l.nodes.front().genuine);
    CHECK(l.nodes.front().name == "A5");
    for (auto [u, d] : l.edges) {
      CHECK(l.nodes[u].order > l.nodes[d].order);
      CHECK(l.nodes[u].order % l.nodes[d].order == 0);
    }
  }
}

TEST_CASE("realizability")
{
  auto a4 = compute_table_dixon(bundled("a4.grp"));
  for (std::size_t i = 0; i < a4->irreducible_count(); ++i) {
    auto chi = a4->irreducible(i);
    if (chi.degree() != Cyclotomic(3))
      continue;
    auto r = is_realizable(chi);
    CHECK(r.alpha == 2);
    CHECK(r.realizable == false);
    CHECK(genuine_names(orbit_types(chi)) == std::set<std::string>{"Z1", "Z2", "Z3"});
  }
  auto z6 = compute_table_dixon(bundled("z6.grp"));
  std::optional<ClassFunction> two, three;
  for (std::size_t i = 0; i < z6->irreducible_count(); ++i) {
    auto chi = z6->irreducible(i);
    auto a = alpha(chi).alpha;
    if (a == 2 && !two)
      two = chi;
    if (a == 3 && !three)
      three = chi;
  }
  REQUIRE(two);
  REQUIRE(three);
  auto sum = *two + *three;
  auto r = is_realizable(sum);
  CHECK(r.alpha == 1);
  CHECK(r.realizable == false);
  CHECK(genuine_names(orbit_types(sum)) == std::set<std::string>{"Z1", "Z2", "Z3"});

  // A5: only the degree 4 constituent of the natural action is realizable,
  // by the point stabiliser.
  auto a5 = compute_table_dixon(bundled("a5.grp"));
  for (std::size_t i = 1; i < a5->irreducible_count(); ++i) {
    auto chi = a5->irreducible(i);
    CAPTURE(chi.degree().str());
    auto r = is_realizable(chi);
    bool some_index = false;
    for (const auto &n : orbit_types(chi).nodes)
      some_index = some_index || (n.genuine && n.index == r.alpha);
    CHECK(r.realizable == some_index);
    CHECK(r.realizable == (chi.degree() == Cyclotomic(4)));
    if (r.realizable == true) {
      REQUIRE(r.witness);
      CHECK(r.witness->index == 5);
    }
  }
}

TEST_CASE("random alpha laws")
{
  std::mt19937 rng(17);
  const std::vector<std::string> files{"s4.grp", "a4.grp", "sl2_3.grp", "a5.grp", "f20.grp",
                                       "d8.grp", "q8xz3.grp", "es27.grp"};
  for (int trial = 0; trial < 60; ++trial) {
    auto file = files[static_cast<std::size_t>(trial) % files.size()];
    CAPTURE(file);
    auto t = compute_table_dixon(bundled(file));
    std::uniform_int_distribution<std::size_t> pick(0, t->irreducible_count() - 1);
    auto a = t->irreducible(pick(rng)), b = t->irreducible(pick(rng));
    auto aa = alpha(a).alpha, ab = alpha(b).alpha;
    CHECK(t->order % aa == 0);
    // Direct sums: gcd.
    auto s = direct_sum_alpha({a, b});
    CHECK(s.agree);
    CHECK(alpha(a + b).alpha == gcd_u64(aa, ab));
    // Multiples do not change alpha.
    CHECK(alpha(Cyclotomic(3) * a).alpha == aa);
    // Galois conjugates.
    for (const auto &x : galois_orbit(a))
      CHECK(alpha(x).alpha == aa);
    // Restriction to a random subgroup divides.
    const auto &lat = t->group->enumerated().lattice();
    std::uniform_int_distribution<std::size_t> sub(0, lat.size() - 1);
    auto h = lat.subgroup(sub(rng));
    auto ah = alpha(h, *table_character(a)).alpha;
    CHECK(aa % ah == 0);
    // p-groups: alpha is the least index of a subgroup with fixed vectors.
    auto [p, k] = prime_power(t->order);
    if (p) {
      std::uint64_t least = t->order;
      for (std::size_t c = 0; c < lat.size(); ++c)
        if (fixed_space_dim(*table_character(a), lat.subgroup(c)) > 0)
          least = std::min(least, lat.classes()[c].index);
      CHECK(aa == least);
    }
  }
}

TEST_CASE("induction from normal subgroups")
{
  auto s5 = compute_table_dixon(bundled("s5.grp"));
  auto a5 = compute_table_dixon(derived_subgroup(*s5->group));
  for (std::size_t i = 0; i < a5->irreducible_count(); ++i) {
    auto rep = induction_alpha_checks(a5->irreducible(i), s5);
    CHECK(rep.ok);
    if (rep.alpha_omega == 1)
      CHECK(rep.alpha_induced == 1);
  }
  auto a5z7 = compute_table_dixon(bundled("a5xz7.grp"));
  auto a5n = compute_table_dixon(derived_subgroup(*a5z7->group));
  for (std::size_t i = 0; i < a5n->irreducible_count(); ++i) {
    auto chi = a5n->irreducible(i);
    if (chi.degree() != Cyclotomic(5))
      continue;
    auto rep = induction_alpha_checks(chi, a5z7);
    std::multiset<std::uint64_t> as;
    for (const auto &c : rep.constituents)
      as.insert(c.alpha);
    CHECK(as == std::multiset<std::uint64_t>{1, 7, 7, 7, 7, 7, 7});
  }
}

TEST_CASE("outer tensor products")
{
  auto z2 = compute_table_dixon(cyclic_group(2));
  auto z3 = compute_table_dixon(cyclic_group(3));
  auto r = tensor_alpha_checks(z2->irreducible(1), z3->irreducible(1));
  CHECK(r.ok);
  CHECK(r.alpha_tensor == 6);
  auto q8 = compute_table_dixon(bundled("q8.grp"));
  std::optional<ClassFunction> h;
  for (std::size_t i = 0; i < q8->irreducible_count(); ++i)
    if (q8->irreducible(i).degree() == Cyclotomic(2))
      h = q8->irreducible(i);
  REQUIRE(h);
  auto r2 = tensor_alpha_checks(*h, z3->irreducible(2));
  CHECK(r2.ok);
  CHECK(r2.alpha_a == 8);
  CHECK(r2.alpha_tensor == 24);
  CHECK(r2.coprime_orders);
}

TEST_CASE("solvability from alpha")
{
  for (std::string file : {"s3.grp", "s4.grp", "a4.grp", "sl2_3.grp", "a5.grp", "s5.grp",
                           "psl2_7.grp", "f20.grp"}) {
    CAPTURE(file);
    auto g = bundled(file);
    auto rep = solvability_crosscheck(compute_table_dixon(g));
    CHECK(rep.agree);
    CHECK(rep.derived_series_solvable == is_solvable(g));
  }
  CHECK(totally_trivial_scan(load_table(default_data_dir() + "/tables/j1.tbl", bundled("j1.grp"))));
  CHECK_FALSE(totally_trivial_scan(compute_table_dixon(bundled("a5.grp"))));
}

TEST_CASE("natural augmentations of symmetric groups")
{
  for (std::size_t n : {3u, 4u, 5u, 6u}) {
    CAPTURE(n);
    auto sn = symmetric_group(n);
    auto v = alpha(sn, *natural_augmentation(false)).alpha;
    auto vm = alpha(sn, *natural_augmentation(true)).alpha;
    auto [p, k] = prime_power(n);
    CHECK(v == (p ? p : 1));
    // Odd prime powers: the sign twist doubles alpha. For n = 3 the two
    // twists are isomorphic.
    if (n == 3)
      CHECK(vm == v);
    else if (p && p != 2)
      CHECK(vm == 2 * p);
  }
}
