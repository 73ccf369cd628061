#include <random>

#include "doctest.h"

#include "alpharep/actions.hpp"
#include "alpharep/alpha.hpp"
#include "alpharep/corpus.hpp"
#include "alpharep/dixon.hpp"
#include "alpharep/finite_group.hpp"
#include "alpharep/group_io.hpp"
#include "alpharep/rational.hpp"
#include "alpharep/subgroups.hpp"

using namespace alpharep;

namespace {

PermGroup bundled(const std::string &file) { return load_group(default_data_dir() + "/groups/" + file); }

struct Pool {
  std::vector<TablePtr> tables;
  Pool()
  {
    for (std::string f : {"s3.grp", "z6.grp", "a4.grp", "q8.grp", "d8.grp", "s4.grp", "sl2_3.grp",
                          "f20.grp", "es27.grp", "a5.grp", "q8xz3.grp", "s5.grp", "z4.grp"})
      tables.push_back(compute_table_dixon(bundled(f)));
  }
};

const Pool &pool()
{
  static Pool p;
  return p;
}

// A random group from the pool and a random character of it: a sum of
// one to three irreducibles with multiplicities.
struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  TablePtr table()
  {
    std::uniform_int_distribution<std::size_t> d(0, pool().tables.size() - 1);
    return pool().tables[d(rng)];
  }
  ClassFunction irreducible(const TablePtr &t)
  {
    std::uniform_int_distribution<std::size_t> d(0, t->irreducible_count() - 1);
    return t->irreducible(d(rng));
  }
  ClassFunction character(const TablePtr &t)
  {
    std::uniform_int_distribution<int> parts(1, 3), mult(1, 2);
    ClassFunction chi = Cyclotomic(mult(rng)) * irreducible(t);
    for (int k = parts(rng) - 1; k > 0; --k)
      chi += Cyclotomic(mult(rng)) * irreducible(t);
    return chi;
  }
};

std::uint64_t alpha_of(const ClassFunction &chi) { return alpha(chi).alpha; }

} // namespace

TEST_CASE("property: alpha divides the group order and is a product of local parts")
{
  Gen gen(101);
  for (int trial = 0; trial < 80; ++trial) {
    auto t = gen.table();
    auto chi = gen.character(t);
    auto r = alpha(chi);
    CHECK(t->order % r.alpha == 0);
    std::uint64_t prod = 1;
    for (const auto &l : r.local) {
      CHECK(t->order % l.p == 0);
      CHECK(p_part(l.value, l.p) == l.value);
      CHECK(l.sylow.order() == p_part(t->order, l.p));
      CHECK(l.sylow.order() % l.witness.order() == 0);
      CHECK(l.value == l.sylow.order() / l.witness.order());
      prod *= l.value;
    }
    CHECK(prod == r.alpha);
  }
}

TEST_CASE("property: trivial constituent gives alpha 1")
{
  Gen gen(103);
  for (int trial = 0; trial < 40; ++trial) {
    auto t = gen.table();
    auto chi = gen.character(t) + t->trivial();
    CHECK(alpha_of(chi) == 1);
  }
}

TEST_CASE("property: direct sums take the gcd")
{
  Gen gen(107);
  for (int trial = 0; trial < 80; ++trial) {
    auto t = gen.table();
    auto a = gen.character(t), b = gen.character(t), c = gen.character(t);
    CHECK(alpha_of(a + b) == gcd_u64(alpha_of(a), alpha_of(b)));
    CHECK(alpha_of(a + b + c) == gcd_u64(alpha_of(a + b), alpha_of(c)));
    auto s = direct_sum_alpha({a, b, c});
    CHECK(s.agree);
    CHECK(s.direct == s.gcd);
  }
}

TEST_CASE("property: restriction divides")
{
  Gen gen(109);
  for (int trial = 0; trial < 60; ++trial) {
    auto t = gen.table();
    auto chi = gen.character(t);
    const auto &lat = t->group->enumerated().lattice();
    std::uniform_int_distribution<std::size_t> d(0, lat.size() - 1);
    auto k = d(gen.rng);
    auto h = lat.subgroup(k);
    auto ah = alpha(h, *table_character(chi)).alpha;
    CHECK(alpha_of(chi) % ah == 0);
    // Conjugate subgroups give the same value.
    for (const auto &conj : lat.classes()[k].conjugates) {
      auto hc = to_perm_group(t->group->enumerated(), conj);
      CHECK(alpha(hc, *table_character(chi)).alpha == ah);
    }
  }
}

TEST_CASE("property: Galois conjugates share alpha")
{
  Gen gen(113);
  for (int trial = 0; trial < 60; ++trial) {
    auto t = gen.table();
    auto chi = gen.irreducible(t);
    for (const auto &x : galois_orbit(chi))
      CHECK(alpha_of(x) == alpha_of(chi));
  }
}

TEST_CASE("property: automorphisms from an overgroup preserve alpha")
{
  std::mt19937 rng(127);
  for (std::string file : {"s4.grp", "s5.grp", "pgaml2_8.grp", "sl2_3.grp"}) {
    CAPTURE(file);
    auto g = bundled(file);
    auto n = derived_subgroup(g);
    auto tn = compute_table_dixon(n);
    auto elems = g.elements();
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int trial = 0; trial < 5; ++trial) {
      const auto &x = elems[pick(rng)];
      std::vector<Permutation> moved;
      for (const auto &r : tn->class_reps)
        moved.push_back(x.inverse() * r * x);
      auto cols = tn->locator->locate(moved);
      for (std::size_t i = 0; i < tn->irreducible_count(); ++i) {
        auto chi = tn->irreducible(i);
        std::vector<Cyclotomic> v;
        for (auto c : cols)
          v.push_back(chi[c]);
        auto img = tn->make(std::move(v));
        REQUIRE(find_irreducible(img));
        CHECK(alpha_of(img) == alpha_of(chi));
      }
    }
  }
}

TEST_CASE("property: induction from normal subgroups")
{
  std::mt19937 rng(131);
  for (const auto &t : pool().tables) {
    CAPTURE(t->name);
    const auto &lat = t->group->enumerated().lattice();
    for (auto k : lat.normal_classes()) {
      auto h = lat.subgroup(k);
      if (h.order() == 1 || h.order() == t->order)
        continue;
      auto th = compute_table_dixon(h);
      std::uniform_int_distribution<std::size_t> d(0, th->irreducible_count() - 1);
      auto omega = th->irreducible(d(rng));
      auto rep = induction_alpha_checks(omega, t);
      CHECK(rep.ok);
      CHECK(rep.alpha_omega == alpha_of(omega));
      CHECK(rep.alpha_induced == alpha_of(induce(omega, t)));
      if (rep.alpha_omega == 1)
        CHECK(rep.alpha_induced == 1);
    }
  }
}

TEST_CASE("property: outer tensor products")
{
  Gen gen(137);
  for (int trial = 0; trial < 40; ++trial) {
    auto ta = gen.table(), tb = gen.table();
    if (ta->order * tb->order > 600)
      continue;
    auto a = gen.irreducible(ta), b = gen.irreducible(tb);
    auto r = tensor_alpha_checks(a, b);
    CAPTURE(ta->name);
    CAPTURE(tb->name);
    CHECK(r.ok);
    CHECK(r.alpha_a == alpha_of(a));
    CHECK(r.alpha_b == alpha_of(b));
    CHECK(r.alpha_tensor % lcm_u64(r.alpha_a, r.alpha_b) == 0);
    CHECK((r.alpha_a * r.alpha_b) % r.alpha_tensor == 0);
    if (gcd_u64(ta->order, tb->order) == 1)
      CHECK(r.alpha_tensor == r.alpha_a * r.alpha_b);
  }
}

TEST_CASE("property: orbit-type lattice")
{
  Gen gen(139);
  for (int trial = 0; trial < 40; ++trial) {
    auto t = gen.table();
    auto chi = gen.character(t);
    auto l = orbit_types(chi);
    CHECK(l.gcd_index == alpha_of(chi));
    std::uint64_t g = 0;
    for (const auto &n : l.nodes) {
      CHECK(n.index * n.order == t->order);
      if (n.genuine) {
        CHECK(n.dim > 0);
        g = gcd_u64(g, n.index);
      }
    }
    CHECK(g == l.gcd_index);
    // The kernel is always an orbit type, with full fixed space.
    std::uint64_t kernel = 0;
    for (std::size_t c = 0; c < t->class_count(); ++c)
      if (chi[c] == chi.degree())
        kernel += t->sizes[c];
    CHECK(l.nodes.back().order == kernel);
    CHECK(l.nodes.back().dim == to_rational_integer(chi.degree()));
  }
}
