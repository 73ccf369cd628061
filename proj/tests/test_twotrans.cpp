#include <set>

#include "doctest.h"

#include "alpharep/actions.hpp"
#include "alpharep/corpus.hpp"
#include "alpharep/dixon.hpp"
#include "alpharep/group_io.hpp"
#include "alpharep/rational.hpp"
#include "alpharep/two_transitive.hpp"

using namespace alpharep;

namespace {

PermGroup bundled(const std::string &file) { return load_group(default_data_dir() + "/groups/" + file); }

// Orbit of (0, 1) on ordered pairs of distinct points.
bool brute_2transitive(const PermGroup &g)
{
  std::size_t n = g.degree();
  if (n < 2)
    return false;
  std::set<std::pair<std::size_t, std::size_t>> seen{{0, 1}};
  std::vector<std::pair<std::size_t, std::size_t>> todo{{0, 1}};
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    for (const auto &s : g.generators()) {
      std::pair<std::size_t, std::size_t> img{s(static_cast<Permutation::Point>(a)),
                                              s(static_cast<Permutation::Point>(b))};
      if (seen.insert(img).second)
        todo.push_back(img);
    }
  }
  return seen.size() == n * (n - 1);
}

std::multiset<std::pair<std::uint64_t, std::uint64_t>> by_character(const std::vector<TwoTransRecord> &recs)
{
  std::multiset<std::pair<std::uint64_t, std::uint64_t>> out;
  std::set<std::size_t> seen;
  for (const auto &r : recs)
    if (r.augmentation_index && seen.insert(*r.augmentation_index).second)
      out.insert({r.degree - 1, r.alpha});
  return out;
}

} // namespace

TEST_CASE("2-transitivity against orbit enumeration")
{
  for (std::string file : {"s3.grp", "a4.grp", "s4.grp", "a5.grp", "s5.grp", "f20.grp",
                           "agl3_2.grp", "psl2_7.grp", "psl2_8.grp", "psl2_11.grp", "m11.grp",
                           "q8.grp", "d8.grp", "z6.grp", "a5xz7.grp", "es27.grp"}) {
    CAPTURE(file);
    auto g = bundled(file);
    CHECK(is_2transitive(g) == brute_2transitive(g));
  }
}

TEST_CASE("corpus 2-transitive tags")
{
  auto c = load_corpus(default_data_dir());
  for (const auto &e : c.entries) {
    if (e.has_tag("stretch") && e.name != "S9")
      continue;
    CAPTURE(e.name);
    auto g = load_group(c.group_path(e));
    CHECK(e.has_tag("2-transitive") == brute_2transitive(g));
    CHECK(e.has_tag("solvable") == is_solvable(g));
  }
}

TEST_CASE("S5 has three 2-transitive actions")
{
  auto recs = scan_2transitive(compute_table_dixon(bundled("s5.grp")));
  std::multiset<std::uint64_t> degrees;
  for (const auto &r : recs) {
    degrees.insert(r.degree);
    REQUIRE(r.augmentation_index);
  }
  CHECK(degrees == std::multiset<std::uint64_t>{2, 5, 6});
  for (const auto &r : recs) {
    if (r.degree == 6)
      CHECK(r.alpha == 1);
    if (r.degree == 5)
      CHECK(r.alpha == 5);
    if (r.degree == 2) {
      CHECK(r.alpha == 2);
      CHECK_FALSE(r.faithful);
      CHECK(r.kernel_order == 60);
    }
  }
}

TEST_CASE("AGL(3,2) augmentation characters")
{
  auto recs = scan_2transitive(compute_table_dixon(bundled("agl3_2.grp")));
  std::multiset<std::pair<std::uint64_t, std::uint64_t>> want{{6, 7}, {7, 2}, {7, 2}, {7, 2}};
  CHECK(by_character(recs) == want);
  for (const auto &r : recs) {
    auto [q, k] = prime_power(r.degree);
    CHECK(r.q == q);
    if (q)
      CHECK(r.alpha % q == 0);
  }
}

TEST_CASE("prime power degrees force alpha > 1")
{
  for (std::string file : {"a5.grp", "psl2_8.grp", "psl2_11.grp", "pgaml2_8.grp", "f20.grp"}) {
    CAPTURE(file);
    for (const auto &r : scan_2transitive(compute_table_dixon(bundled(file)))) {
      CAPTURE(r.degree);
      if (r.q)
        CHECK(r.alpha % r.q == 0);
      else
        CHECK(r.alpha == 1);
    }
  }
}

TEST_CASE("augmentation criterion on coset actions")
{
  auto s5 = bundled("s5.grp");
  auto s4 = PermGroup({parse_permutation("(1 2 3 4)", 5), parse_permutation("(1 2)", 5)});
  auto c = augmentation_alpha_criterion(s5, s4);
  CHECK(c.degree == 5);
  CHECK(c.q == 5);
  CHECK(c.alpha == 5);
  CHECK(c.consistent);
}

TEST_CASE("affine socle")
{
  auto r = affine_socle_check(natural_action(bundled("agl3_2.grp")));
  CHECK(r.two_transitive);
  CHECK(r.branch == "affine");
  CHECK(r.socle_order == 8);
  CHECK(r.socle_elementary_abelian);
  CHECK(r.socle_regular);
  CHECK(r.alpha % 2 == 0);
  CHECK(r.ok);
  auto s = affine_socle_check(natural_action(bundled("psl2_11.grp")));
  CHECK(s.branch == "almost simple");
  CHECK(s.socle_nonabelian_simple);
  CHECK(s.ok);
  auto f = affine_socle_check(natural_action(bundled("f20.grp")));
  CHECK(f.branch == "affine");
  CHECK(f.alpha == 5);
}

TEST_CASE("classification excerpt")
{
  auto dir = default_data_dir();
  auto rep = verify_classification_excerpt(dir + "/classification_excerpt.txt", dir + "/groups");
  CHECK(rep.ok);
  CHECK(rep.rows.size() == 7);
  std::size_t data_only = 0;
  for (const auto &row : rep.rows)
    data_only += row.data_only;
  CHECK(data_only == 2);
}
