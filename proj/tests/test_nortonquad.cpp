#include <random>

#include "doctest.h"

#include "alpharep/char_table.hpp"
#include "alpharep/congruence.hpp"
#include "alpharep/corpus.hpp"
#include "alpharep/dixon.hpp"
#include "alpharep/matrix_rep.hpp"
#include "alpharep/norton.hpp"
#include "alpharep/perm_group.hpp"
#include "alpharep/quadratic_map.hpp"

using namespace alpharep;

namespace {

MatQ random_matrix(std::mt19937 &rng, std::size_t n)
{
  std::uniform_int_distribution<int> c(-4, 4), d(1, 3);
  MatQ m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = Rational(c(rng), d(rng));
  return m;
}

VecQ random_vector(std::mt19937 &rng, std::size_t n)
{
  std::uniform_int_distribution<int> c(-5, 5);
  VecQ v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = Rational(c(rng));
  return v;
}

// (x_i x_j) over i <= j in lexicographic order.
VecQ delta(const VecQ &x)
{
  std::size_t n = static_cast<std::size_t>(x.size());
  VecQ d(static_cast<Eigen::Index>(n * (n + 1) / 2));
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (Eigen::Index j = i; j < x.size(); ++j)
      d(k++) = x(i) * x(j);
  return d;
}

std::vector<Rational> zero_sum(std::mt19937 &rng, std::size_t n)
{
  std::uniform_int_distribution<int> c(-6, 6);
  std::vector<Rational> z(n);
  Rational s = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    z[i] = Rational(c(rng));
    s += z[i];
  }
  z[n - 1] = -s;
  return z;
}

std::vector<Rational> permuted(const std::vector<Rational> &z, const std::vector<std::size_t> &s)
{
  std::vector<Rational> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    out[s[i]] = z[i];
  return out;
}

} // namespace

TEST_CASE("symmetric square matrices")
{
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 4;
    auto m = random_matrix(rng, n), p = random_matrix(rng, n);
    auto x = random_vector(rng, n);
    MatQ sm = to_rational(sym_square_matrix(to_cyclotomic(m)));
    CHECK(sm * delta(x) == delta(m * x));
    MatQ smp = to_rational(sym_square_matrix(to_cyclotomic(m * p)));
    MatQ sp = to_rational(sym_square_matrix(to_cyclotomic(p)));
    CHECK(smp == sm * sp);
  }
  CHECK(sym_basis(3) == std::vector<std::pair<std::size_t, std::size_t>>{
                            {0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
}

TEST_CASE("S5 projection of Sym^2 V- onto V")
{
  auto dir = default_data_dir();
  auto c = load_corpus(dir);
  auto rep = load_rep(c.rep_path(c.projection.rep_file));
  auto t = compute_table_dixon(rep.group);
  // Sym^2 V- contains V = V- twisted by the sign.
  auto v = sign_twist(rep_character(rep, t), derived_subgroup(rep.group));
  auto phi = quad_map_build(rep, v, t);
  auto pc = check_projection(phi, 4);
  CHECK(pc.ok);
  CHECK(pc.trace == 4);
  CHECK(phi.components.size() == 4);
  CHECK((phi.projection == c.projection.printed ||
         MatQ(phi.projection.transpose()) == c.projection.printed));
  for (const auto &p : phi.components)
    CHECK(p.is_homogeneous());

  // phi(M x) = T phi(x) at random rational points.
  std::mt19937 rng(31);
  for (std::size_t g = 0; g < rep.generators.size(); ++g) {
    MatQ m = to_rational(rep.generators[g]);
    MatQ tg = to_rational(phi.target_generators[g]);
    for (int k = 0; k < 10; ++k) {
      auto x = random_vector(rng, rep.dim);
      VecQ lhs = phi.coefficients * delta(m * x);
      VecQ rhs = tg * (phi.coefficients * delta(x));
      CHECK(lhs == rhs);
    }
  }
  auto eq = check_equivariance(phi);
  CHECK(eq.ok);
  CHECK(admissibility_check(phi).admissible);
}

TEST_CASE("Q8 maps on the quaternions")
{
  auto c = load_corpus(default_data_dir());
  auto rep = load_rep(c.rep_path(c.quad_rep_file));
  auto t = compute_table_dixon(rep.group);
  auto s2 = sym_square(rep_character(rep, t));
  // Sym^2 of H is the sum of the three nontrivial linear characters.
  std::vector<std::size_t> cons;
  for (std::size_t i = 0; i < t->irreducible_count(); ++i)
    if (inner_product(s2, t->irreducible(i)) > 0) {
      cons.push_back(i);
      CHECK(t->irreducible(i).degree() == Cyclotomic(1));
      CHECK(inner_product(s2, t->irreducible(i)) == 1);
    }
  REQUIRE(cons.size() == 3);
  for (const auto &f : c.quad_maps) {
    CAPTURE(f.name);
    std::size_t hits = 0;
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = x + 1; y < 3; ++y) {
        auto phi = quad_map_build(rep, t->irreducible(cons[x]) + t->irreducible(cons[y]), t);
        if (!(phi.projection * f.basis == f.basis))
          continue;
        ++hits;
        auto g = with_basis(phi, f.basis);
        REQUIRE(g.components.size() == 2);
        CHECK(g.components[0] == parse_polynomial(f.components[0], 2));
        CHECK(g.components[1] == parse_polynomial(f.components[1], 2));
        CHECK(check_equivariance(g).ok);
        CHECK(admissibility_check(g).admissible);
      }
    CHECK(hits == 1);
  }
}

TEST_CASE("admissibility of component lists")
{
  auto ok = admissibility_check({parse_polynomial("x1^2 + x2^2", 2),
                                 parse_polynomial("x1^2 - x2^2", 2)});
  CHECK(ok.admissible);
  REQUIRE(ok.certificates.size() == 2);
  auto bad = admissibility_check({parse_polynomial("x1^2", 2), parse_polynomial("x1*x2", 2)});
  CHECK_FALSE(bad.admissible);
  // Over C, x1^2 + x2^2 vanishes on (1, i).
  CHECK_FALSE(admissibility_check({parse_polynomial("x1^2 + x2^2", 2)}).admissible);
}

TEST_CASE("Norton product, two routes")
{
  std::mt19937 rng(37);
  for (std::size_t n : {4u, 5u, 6u, 7u}) {
    CAPTURE(n);
    auto a = norton_build(n);
    CHECK(a.pairs.size() == n * (n - 1) / 2);
    CHECK(check_norton_identities(a).ok);
    for (int trial = 0; trial < 15; ++trial) {
      auto z = zero_sum(rng, n), w = zero_sum(rng, n);
      auto zz = norton_product(a, z, z);
      CHECK(zz == norton_square_closed_form(n, z));
      CHECK(norton_product(a, z, w) == norton_product(a, w, z));
      Rational s = 0;
      for (const auto &x : zz)
        s += x;
      CHECK(s == 0);
      // Equivariance under a cyclic shift.
      std::vector<std::size_t> shift(n);
      for (std::size_t i = 0; i < n; ++i)
        shift[i] = (i + 1) % n;
      CHECK(norton_product(a, permuted(z, shift), permuted(z, shift)) == permuted(zz, shift));
    }
  }
}

TEST_CASE("Norton nilpotents")
{
  auto four = norton_nilpotents(4);
  CHECK(four.degenerate);
  std::mt19937 rng(41);
  auto a4 = norton_build(4);
  for (int k = 0; k < 5; ++k) {
    auto z = zero_sum(rng, 4);
    for (const auto &x : norton_product(a4, z, z))
      CHECK(x == 0);
  }
  for (std::size_t n : {6u, 8u}) {
    auto r = norton_nilpotents(n);
    CHECK(r.family_verified);
    auto a = norton_build(n);
    for (const auto &signs : r.family) {
      std::vector<Rational> z(signs.begin(), signs.end());
      for (const auto &x : norton_product(a, z, z))
        CHECK(x == 0);
    }
  }
  for (std::size_t n : {5u, 7u, 9u}) {
    auto r = norton_nilpotents(n);
    CHECK(r.none);
    auto a = norton_build(n);
    for (int k = 0; k < 20; ++k) {
      auto z = zero_sum(rng, n);
      bool zero_vec = std::all_of(z.begin(), z.end(), [](const Rational &x) { return x == 0; });
      auto zz = norton_product(a, z, z);
      bool zero_sq = std::all_of(zz.begin(), zz.end(), [](const Rational &x) { return x == 0; });
      CHECK(zero_vec == zero_sq);
    }
  }
  CHECK(admissibility_check(norton_square_polynomials(norton_build(5))).admissible);
}

TEST_CASE("V- reduces to V")
{
  for (std::size_t n : {5u, 7u}) {
    auto r = reduce_Vminus_to_V(n);
    CHECK(r.signs_match_parity);
    CHECK(r.sym_squares_equal);
    CHECK(r.spot_check);
    CHECK(r.ok);
  }
  auto w = sn_witness_orbits(5, true);
  CHECK(w.ok);
  CHECK(w.alpha_v == 5);
  CHECK(w.alpha_vminus == 10);
  CHECK(w.gcd_v == 5);
  CHECK(w.gcd_vminus == 10);
  REQUIRE(w.computed_alpha_vminus);
  CHECK(*w.computed_alpha_vminus == 10);
}

TEST_CASE("congruences")
{
  CHECK(congruence_report(8, 2, 2).statement == "deg ≡ 4 (mod 8)");
  CHECK(congruence_report(10, 2, 4).statement == "deg ≡ 16 ≡ 6 (mod 10)");
  auto r = congruence_report(10, 2, 4, "S5 on V-");
  CHECK(r.residue == 6);
  CHECK(r.informative);
  CHECK(r.reference_degree == 16);
  auto triv = congruence_report(1, 3, 2);
  CHECK_FALSE(triv.informative);
  // residue is k^dim mod alpha
  for (std::uint64_t a = 1; a < 30; ++a)
    for (unsigned k = 1; k < 5; ++k)
      for (unsigned d = 1; d < 5; ++d) {
        std::uint64_t p = 1;
        for (unsigned i = 0; i < d; ++i)
          p *= k;
        CHECK(congruence_report(a, k, d).residue == p % a);
      }
}
