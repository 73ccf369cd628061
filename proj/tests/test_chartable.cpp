#include <complex>
#include <random>
#include <sstream>

#include "doctest.h"

#include "alpharep/actions.hpp"
#include "alpharep/char_table.hpp"
#include "alpharep/corpus.hpp"
#include "alpharep/dixon.hpp"
#include "alpharep/errors.hpp"
#include "alpharep/finite_group.hpp"
#include "alpharep/group_io.hpp"
#include "alpharep/matrix_rep.hpp"
#include "alpharep/subgroups.hpp"
#include "alpharep/table_io.hpp"

using namespace alpharep;

namespace {

PermGroup bundled(const std::string &file) { return load_group(default_data_dir() + "/groups/" + file); }

std::string table_file(const std::string &file) { return default_data_dir() + "/tables/" + file; }

// Orthogonality checked in floating point, independent of exact arithmetic.
void check_orthogonality(const CharacterTable &t)
{
  const std::size_t r = t.class_count();
  REQUIRE(t.irreducible_count() == r);
  std::vector<std::vector<std::complex<double>>> z(r, std::vector<std::complex<double>>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      z[i][k] = t.irr[i][k].approx();
  double n = static_cast<double>(t.order);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::complex<double> s = 0;
      for (std::size_t k = 0; k < r; ++k)
        s += static_cast<double>(t.sizes[k]) * z[i][k] * std::conj(z[j][k]);
      CHECK(std::abs(s / n - (i == j ? 1.0 : 0.0)) < 1e-8);
    }
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l) {
      std::complex<double> s = 0;
      for (std::size_t i = 0; i < r; ++i)
        s += z[i][k] * std::conj(z[i][l]);
      double want = k == l ? static_cast<double>(t.centralizer_order(k)) : 0.0;
      CHECK(std::abs(s - want) < 1e-6);
    }
}

// Fixed points of each class representative, counted directly.
std::vector<Cyclotomic> fixed_point_counts(const CharacterTable &t)
{
  std::vector<Cyclotomic> v;
  for (const auto &x : t.class_reps)
    v.emplace_back(static_cast<long>(x.fixed_points()));
  return v;
}

} // namespace

TEST_CASE("Dixon tables satisfy orthogonality")
{
  for (std::string file : {"s3.grp", "a4.grp", "q8.grp", "d8.grp", "s4.grp", "sl2_3.grp",
                           "a5.grp", "f20.grp", "es27.grp", "q8xz3.grp", "z6.grp", "s5.grp",
                           "psl2_7.grp", "psl2_8.grp", "a6.grp", "psl2_11.grp"}) {
    CAPTURE(file);
    auto t = compute_table_dixon(bundled(file));
    CHECK(validate_table(*t).empty());
    check_orthogonality(*t);
    std::uint64_t sq = 0;
    for (std::size_t i = 0; i < t->irreducible_count(); ++i) {
      auto d = to_rational_integer(t->irr[i][0]);
      CHECK(t->order % static_cast<std::uint64_t>(d) == 0);
      sq += static_cast<std::uint64_t>(d * d);
    }
    CHECK(sq == t->order);
    CHECK(t->irr[0] == std::vector<Cyclotomic>(t->class_count(), Cyclotomic(1)));
  }
}

TEST_CASE("A5 table against the printed values")
{
  auto computed = compute_table_dixon(bundled("a5.grp"));
  auto printed = load_table(table_file("a5.tbl"));
  CHECK(tables_equivalent(*computed, *printed));
  auto golden_minus = parse_cyclotomic("1+E(5)^2+E(5)^3");
  CHECK(golden_minus * golden_minus == golden_minus + Cyclotomic(1));
  CHECK(std::abs(golden_minus.approx().real() - (1 - std::sqrt(5.0)) / 2) < 1e-12);
}

TEST_CASE("J1 bundled table")
{
  auto t = load_table(table_file("j1.tbl"));
  CHECK(validate_table(*t).empty());
  check_orthogonality(*t);
  std::vector<std::int64_t> degrees;
  for (const auto &row : t->irr)
    degrees.push_back(to_rational_integer(row[0]));
  CHECK(degrees == std::vector<std::int64_t>{1, 56, 56, 76, 76, 77, 77, 77, 120, 120, 120, 133,
                                              133, 133, 209});
}

TEST_CASE("permutation characters")
{
  for (std::string file : {"s5.grp", "a5.grp", "psl2_11.grp", "agl3_2.grp"}) {
    CAPTURE(file);
    auto t = compute_table_dixon(bundled(file));
    auto pi = permutation_character(natural_action(*t->group), t);
    CHECK(pi.values() == fixed_point_counts(*t));
    auto aug = augmentation_character(natural_action(*t->group), t);
    CHECK(aug + t->trivial() == pi);
    // 2-transitive: the augmentation is irreducible.
    CHECK(inner_product(aug, aug) == 1);
    CHECK(find_irreducible(aug).has_value());
  }
}

TEST_CASE("decomposition, tensor and symmetric squares")
{
  std::mt19937 rng(13);
  for (std::string file : {"s4.grp", "a5.grp", "sl2_3.grp", "es27.grp", "f20.grp"}) {
    CAPTURE(file);
    auto t = compute_table_dixon(bundled(file));
    std::uniform_int_distribution<std::size_t> pick(0, t->irreducible_count() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      auto a = t->irreducible(pick(rng)), b = t->irreducible(pick(rng));
      auto ab = tensor(a, b);
      auto m = decompose(ab);
      ClassFunction rebuilt = t->make(std::vector<Cyclotomic>(t->class_count(), Cyclotomic(0)));
      for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(m[i] >= 0);
        rebuilt += Cyclotomic(static_cast<long>(m[i])) * t->irreducible(i);
      }
      CHECK(rebuilt == ab);
      auto d = to_rational_integer(a.degree());
      CHECK(to_rational_integer(sym_square(a).degree()) == d * (d + 1) / 2);
      CHECK(to_rational_integer(alt_square(a).degree()) == d * (d - 1) / 2);
      CHECK(sym_square(a) + alt_square(a) == tensor(a, a));
      CHECK(is_character(sym_square(a)));
    }
  }
}

TEST_CASE("Frobenius reciprocity")
{
  auto g = bundled("s5.grp");
  auto tg = compute_table_dixon(g);
  const auto &lat = g.enumerated().lattice();
  for (std::size_t k = 1; k + 1 < lat.size(); ++k) {
    auto h = lat.subgroup(k);
    auto th = compute_table_dixon(h);
    for (std::size_t i = 0; i < th->irreducible_count(); ++i) {
      auto omega = th->irreducible(i);
      auto ind = induce(omega, tg);
      CHECK(to_rational_integer(ind.degree()) ==
            to_rational_integer(omega.degree()) * static_cast<std::int64_t>(g.order() / h.order()));
      for (std::size_t j = 0; j < tg->irreducible_count(); ++j) {
        auto chi = tg->irreducible(j);
        CHECK(inner_product(ind, chi) == inner_product(omega, restrict_to(chi, th)));
      }
    }
  }
}

TEST_CASE("Galois orbits and sign twists")
{
  auto t = compute_table_dixon(bundled("a5.grp"));
  auto orbit = galois_orbit(t->irreducible(1));
  CHECK(orbit.size() == 2);
  auto s5 = bundled("s5.grp");
  auto ts = compute_table_dixon(s5);
  auto aug = augmentation_character(natural_action(s5), ts);
  auto tw = sign_twist(aug, derived_subgroup(s5));
  CHECK(tw != aug);
  CHECK(find_irreducible(tw).has_value());
  CHECK(sign_twist(tw, derived_subgroup(s5)) == aug);
}

TEST_CASE("table files")
{
  auto t = compute_table_dixon(bundled("psl2_8.grp"));
  std::istringstream in(write_table(*t));
  auto back = read_table(in);
  CHECK(tables_equivalent(*t, *back));
  CHECK(back->irr == t->irr);

  // Columns located by power maps agree with the enumerated classes.
  std::istringstream again(write_table(*t));
  auto located = read_table(again, "<test>", bundled("psl2_8.grp"));
  for (std::size_t c = 0; c < located->class_count(); ++c) {
    CHECK(located->class_reps[c].order() == located->orders[c]);
    CHECK(located->locator->locate({located->class_reps[c]}).front() == c);
  }
  auto pi = located->make(fixed_point_counts(*located));
  CHECK(decompose(pi).front() == 1);
  for (auto m : decompose(pi))
    CHECK(m >= 0);

  std::istringstream bad("group X\norder 2\nclasses 2\nsizes 1 1\norders 1 2\nchi_1: 1 1\n"
                         "chi_2: 1 2\n");
  CHECK_THROWS(read_table(bad));
  std::istringstream garbage("group X\norder two\n");
  CHECK_THROWS_AS(read_table(garbage), ParseError);
}

TEST_CASE("Q8 and D8 share a character table")
{
  auto q = compute_table_dixon(bundled("q8.grp"));
  auto d = compute_table_dixon(bundled("d8.grp"));
  CHECK(tables_equivalent(*q, *d, false));
  CHECK_FALSE(tables_equivalent(*q, *d));
}

TEST_CASE("representation files")
{
  auto rep = load_rep(default_data_dir() + "/reps/q8_h.rep");
  CHECK(rep.dim == 2);
  CHECK(rep.group.order() == 8);
  auto t = compute_table_dixon(rep.group);
  auto chi = rep_character(rep, t);
  CHECK(inner_product(chi, chi) == 1);
  CHECK(to_rational_integer(chi.degree()) == 2);
  auto s = load_rep(default_data_dir() + "/reps/s5_vminus.rep");
  auto ts = compute_table_dixon(s.group);
  auto vminus = rep_character(s, ts);
  CHECK(inner_product(vminus, vminus) == 1);
  CHECK(vminus == sign_twist(augmentation_character(natural_action(s.group), ts),
                             derived_subgroup(s.group)));
  std::istringstream bad("name x\ndegree 2\ndim 2\ngen (1 2)\n1 0\n");
  CHECK_THROWS(read_rep(bad));
}
