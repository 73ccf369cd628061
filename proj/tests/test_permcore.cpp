#include <map>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"

#include "alpharep/actions.hpp"
#include "alpharep/corpus.hpp"
#include "alpharep/errors.hpp"
#include "alpharep/finite_group.hpp"
#include "alpharep/group_io.hpp"
#include "alpharep/perm_group.hpp"
#include "alpharep/rational.hpp"
#include "alpharep/subgroups.hpp"

using namespace alpharep;

namespace {

PermGroup bundled(const std::string &file) { return load_group(default_data_dir() + "/groups/" + file); }

// Closure under right multiplication by generators.
std::set<Permutation> brute_elements(const PermGroup &g)
{
  std::set<Permutation> seen{Permutation(g.degree())};
  std::vector<Permutation> todo{Permutation(g.degree())};
  while (!todo.empty()) {
    Permutation x = todo.back();
    todo.pop_back();
    for (const auto &s : g.generators()) {
      Permutation y = x * s;
      if (seen.insert(y).second)
        todo.push_back(y);
    }
  }
  return seen;
}

// Number of classes is the average centralizer order.
std::uint64_t burnside_class_count(const std::set<Permutation> &elems)
{
  std::uint64_t commuting = 0;
  for (const auto &a : elems)
    for (const auto &b : elems)
      commuting += a * b == b * a;
  return commuting / elems.size();
}

Permutation random_perm(std::mt19937 &rng, std::size_t n)
{
  std::vector<Permutation::Point> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

Permutation random_element(std::mt19937 &rng, const PermGroup &g)
{
  Permutation x(g.degree());
  std::uniform_int_distribution<std::size_t> pick(0, g.generators().size() - 1);
  for (int k = 0; k < 40; ++k)
    x = x * g.generators()[pick(rng)];
  return x;
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

} // namespace

TEST_CASE("permutation basics")
{
  auto p = parse_permutation("(1 2 3)(4 5)", 6);
  CHECK(p.order() == 6);
  CHECK(p.sign() == -1);
  CHECK(p.fixed_points() == 1);
  CHECK(p.str() == "(1 2 3)(4 5)");
  CHECK(p.pow(6).is_identity());
  CHECK(p.pow(-1) == p.inverse());
  CHECK(p * p.inverse() == Permutation(6));
  auto q = parse_permutation("(1 2)", 3), r = parse_permutation("(2 3)", 3);
  // (q * r)(x) = q(r(x))
  CHECK((q * r)(0) == 1);
  CHECK((q * r)(1) == 2);
  CHECK(parse_permutation("()", 4).is_identity());
  CHECK_THROWS_AS(parse_permutation("(1 5)", 4), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2 1)", 4), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2", 4), ParseError);
}

TEST_CASE("permutation properties")
{
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 12;
    auto a = random_perm(rng, n), b = random_perm(rng, n), c = random_perm(rng, n);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK((a * b).sign() == a.sign() * b.sign());
    std::uint64_t o = 1, len = 0;
    for (auto l : a.cycle_type()) {
      o = lcm_u64(o, l);
      len += l;
    }
    CHECK(len == n);
    CHECK(a.order() == o);
    CHECK(a.pow(static_cast<long>(o)).is_identity());
    CHECK(conjugate(a, b).cycle_type() == a.cycle_type());
    CHECK(parse_permutation(a.is_identity() ? "()" : a.str(), n) == a);
  }
}

TEST_CASE("bundled group orders and class counts")
{
  const std::map<std::string, std::pair<std::uint64_t, std::size_t>> known{
      {"a4.grp", {12, 4}},        {"a5.grp", {60, 5}},       {"a5xz7.grp", {420, 35}},
      {"a6.grp", {360, 7}},       {"a7.grp", {2520, 9}},     {"a8.grp", {20160, 14}},
      {"agl3_2.grp", {1344, 11}}, {"d8.grp", {8, 5}},        {"es27.grp", {27, 11}},
      {"f20.grp", {20, 5}},       {"m11.grp", {7920, 10}},   {"pgaml2_8.grp", {1512, 11}},
      {"psl2_11.grp", {660, 8}},  {"psl2_11_12.grp", {660, 8}}, {"psl2_7.grp", {168, 6}},
      {"psl2_8.grp", {504, 9}},   {"psl3_2.grp", {168, 6}},  {"q8.grp", {8, 5}},
      {"q8xz3.grp", {24, 15}},    {"s3.grp", {6, 3}},        {"s4.grp", {24, 5}},
      {"s5.grp", {120, 7}},       {"s6.grp", {720, 11}},     {"sl2_3.grp", {24, 7}},
      {"z2xz3.grp", {6, 6}},      {"z4.grp", {4, 4}},        {"z6.grp", {6, 6}}};
  for (const auto &[file, oc] : known) {
    CAPTURE(file);
    auto g = bundled(file);
    CHECK(g.order() == oc.first);
    CHECK(g.enumerated().class_count() == oc.second);
  }
  CHECK(bundled("j1.grp").order() == 175560);
  CHECK(bundled("s9.grp").order() == 362880);
}

TEST_CASE("orders and class counts against brute force")
{
  for (std::string file : {"a4.grp", "a5.grp", "s4.grp", "s5.grp", "q8.grp", "d8.grp",
                           "sl2_3.grp", "f20.grp", "es27.grp", "psl2_7.grp", "q8xz3.grp"}) {
    CAPTURE(file);
    auto g = bundled(file);
    auto elems = brute_elements(g);
    CHECK(g.order() == elems.size());
    CHECK(g.enumerated().class_count() == burnside_class_count(elems));
    for (const auto &x : elems)
      CHECK(g.contains(x));
  }
}

TEST_CASE("conjugacy classes")
{
  std::mt19937 rng(5);
  for (std::string file : {"a5.grp", "s5.grp", "sl2_3.grp", "psl2_8.grp", "m11.grp"}) {
    CAPTURE(file);
    auto g = bundled(file);
    const auto &fg = g.enumerated();
    std::uint64_t total = 0;
    for (std::size_t k = 0; k < fg.class_count(); ++k) {
      CHECK(g.order() % fg.class_size(k) == 0);
      total += fg.class_size(k);
    }
    CHECK(total == g.order());
    for (int t = 0; t < 50; ++t) {
      auto x = random_element(rng, g), y = random_element(rng, g);
      auto ix = fg.index_of(x);
      CHECK(fg.class_of(ix) == fg.class_of(fg.index_of(conjugate(x, y))));
      CHECK(fg.element_order(ix) == x.order());
      for (long e : {2L, 3L, 5L, -1L})
        CHECK(fg.power_class(fg.class_of(ix), e) == fg.class_of(fg.index_of(x.pow(e))));
    }
  }
  CHECK_FALSE(bundled("a5.grp").enumerated().find(parse_permutation("(1 2)", 5)).has_value());
}

TEST_CASE("structural operations")
{
  auto s4 = symmetric_group(4);
  auto series = derived_series(s4);
  std::vector<std::uint64_t> orders;
  for (const auto &h : series)
    orders.push_back(h.order());
  CHECK(orders == std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(is_solvable(s4));
  CHECK_FALSE(is_solvable(symmetric_group(5)));
  CHECK(alternating_group(6).order() == 360);
  CHECK(cyclic_group(9).is_abelian());
  for (std::size_t n = 1; n <= 7; ++n)
    CHECK(symmetric_group(n).order() == factorial(n));

  for (std::string file : {"s5.grp", "agl3_2.grp", "psl2_11.grp", "a5xz7.grp"}) {
    CAPTURE(file);
    auto g = bundled(file);
    for (auto p : prime_divisors(g.order())) {
      auto s = sylow_subgroup(g, p);
      CHECK(s.order() == p_part(g.order(), p));
      CHECK(s.is_subgroup_of(g));
    }
    auto d = derived_subgroup(g);
    CHECK(d.is_normal_in(g));
  }
  auto p = direct_product(symmetric_group(3), cyclic_group(4));
  CHECK(p.order() == 24);
  CHECK(p.degree() == 7);
  CHECK(exponent(p) == 12);
}

TEST_CASE("subgroup lattice counts")
{
  // Conjugacy classes of subgroups and total subgroup counts.
  const std::map<std::string, std::pair<std::size_t, std::size_t>> known{
      {"a4.grp", {5, 10}}, {"s4.grp", {11, 30}}, {"a5.grp", {9, 59}},
      {"q8.grp", {6, 6}},  {"d8.grp", {8, 10}},  {"s5.grp", {19, 156}}};
  for (const auto &[file, counts] : known) {
    CAPTURE(file);
    auto g = bundled(file);
    const auto &lat = g.enumerated().lattice();
    CHECK(lat.size() == counts.first);
    CHECK(lat.total_subgroups() == counts.second);
  }
}

TEST_CASE("Kaplan-Levy products")
{
  CHECK(kaplan_levy_all_choices(bundled("s4.grp")));
  CHECK(kaplan_levy_all_choices(bundled("sl2_3.grp")));
  CHECK_FALSE(kaplan_levy_all_choices(bundled("a5.grp")));
}

TEST_CASE("group file parsing")
{
  std::istringstream ok("# comment\nname T\ndegree 4\ngen (1 2 3 4)\n");
  auto g = read_group(ok);
  CHECK(g.order() == 4);
  CHECK(g.name() == "T");
  std::istringstream bad_key("degree 3\ngenerator (1 2)\n");
  CHECK_THROWS_AS(read_group(bad_key), ParseError);
  std::istringstream no_degree("gen (1 2)\n");
  CHECK_THROWS_AS(read_group(no_degree), ParseError);
  std::istringstream round(write_group(bundled("s5.grp")));
  CHECK(read_group(round).order() == 120);
  CHECK_THROWS_AS(load_group("/nonexistent/x.grp"), InvalidArgument);
}

TEST_CASE("element bound")
{
  auto saved = bounds().elements;
  bounds().elements = 100;
  CHECK_THROWS_AS(bundled("s5.grp").enumerated(), BoundExceeded);
  bounds().elements = saved;
}
