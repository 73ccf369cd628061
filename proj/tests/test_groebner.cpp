#include <random>
#include <set>

#include "doctest.h"

#include "alpharep/errors.hpp"
#include "alpharep/groebner.hpp"
#include "alpharep/polynomial.hpp"

using namespace alpharep;

namespace {

Polynomial P(const std::string &s, std::size_t n) { return parse_polynomial(s, n); }

Polynomial s_polynomial(const Polynomial &f, const Polynomial &g)
{
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Monomial uf(l.size()), ug(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    uf[i] = l[i] - f.leading_monomial()[i];
    ug[i] = l[i] - g.leading_monomial()[i];
  }
  return f.times_monomial(uf, 1 / f.leading_coefficient()) -
         g.times_monomial(ug, 1 / g.leading_coefficient());
}

// Buchberger's criterion, reduced and monic.
void check_reduced_groebner(const std::vector<Polynomial> &gens, const IdealBasis &b)
{
  CHECK(b.groebner);
  for (const auto &f : gens)
    CHECK(reduce(f, b.polys).is_zero());
  for (std::size_t i = 0; i < b.polys.size(); ++i) {
    CHECK(b.polys[i].leading_coefficient() == 1);
    for (std::size_t j = i + 1; j < b.polys.size(); ++j)
      CHECK(reduce(s_polynomial(b.polys[i], b.polys[j]), b.polys).is_zero());
    for (std::size_t j = 0; j < b.polys.size(); ++j) {
      if (i == j)
        continue;
      for (const auto &[m, c] : b.polys[i].terms())
        CHECK_FALSE(divides(b.polys[j].leading_monomial(), m));
    }
  }
}

Polynomial random_poly(std::mt19937 &rng, std::size_t n, unsigned max_deg)
{
  std::uniform_int_distribution<int> coeff(-3, 3), terms(1, 4);
  std::uniform_int_distribution<unsigned> e(0, max_deg);
  Polynomial p(n);
  for (int t = terms(rng); t > 0; --t) {
    Monomial m(n);
    unsigned budget = max_deg;
    for (auto &x : m) {
      x = std::min(budget, e(rng));
      budget -= x;
    }
    p.add_term(m, Rational(coeff(rng)));
  }
  return p;
}

} // namespace

TEST_CASE("polynomial arithmetic and printing")
{
  auto f = P("x1^2 - 2*x1*x2 + 1/2", 2);
  CHECK(f.str() == "x1^2 - 2*x1*x2 + 1/2");
  CHECK(parse_polynomial(f.str(), 2) == f);
  CHECK(f.degree() == 2);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(P("x1*x2 + x3^2", 3).is_homogeneous());
  CHECK((P("x1 + x2", 2) * P("x1 - x2", 2)) == P("x1^2 - x2^2", 2));
  CHECK(f.evaluate({Rational(1), Rational(2)}) == Rational(-5, 2));
  CHECK(f.substitute(1, 0) == P("x1^2 + 1/2", 2));
  CHECK(P("0", 2).is_zero());
  CHECK(P("3", 2).is_constant());
  // grevlex: x1 > x2 > x3, degree first.
  CHECK(P("x3^2 + x1*x2 + x1", 3).leading_monomial() == Monomial{1, 1, 0});
  CHECK(P("x1*x3 + x2^2", 3).leading_monomial() == Monomial{0, 2, 0});
  CHECK_THROWS_AS(parse_polynomial("x1 +", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0", 1), ParseError);
  auto sys = parse_polynomial_system("x1^2\n\n# comment\nx2*x3\n");
  REQUIRE(sys.size() == 2);
  CHECK(sys[0].nvars() == 3);
}

TEST_CASE("textbook basis")
{
  // x^3 - 2xy, x^2 y - 2y^2 + x in grevlex: {x^2, xy, y^2 - x/2}.
  std::vector<Polynomial> gens{P("x1^3 - 2*x1*x2", 2), P("x1^2*x2 - 2*x2^2 + x1", 2)};
  auto b = buchberger(gens);
  check_reduced_groebner(gens, b);
  std::set<std::string> got;
  for (const auto &p : b.polys)
    got.insert(p.str());
  CHECK(got == std::set<std::string>{"x1^2", "x1*x2", "x2^2 - 1/2*x1"});
  CHECK(ideal_member(P("x1^3", 2), b));
  CHECK_FALSE(ideal_member(P("x1", 2), b));
}

TEST_CASE("common zeros")
{
  CHECK(has_no_common_zero({P("x1", 1), P("x1 - 1", 1)}));
  CHECK_FALSE(has_no_common_zero({P("x1^2 - x2", 2), P("x1*x2 - 1", 2)}));
  CHECK(has_no_common_zero({P("x1^2 + x2^2 - 1", 2), P("x1", 2), P("x2", 2)}));
  // Over C, x^2 + 1 has roots.
  CHECK_FALSE(has_no_common_zero({P("x1^2 + 1", 1)}));
  auto d = dehomogenize({P("x1^2 + x2^2", 2), P("x1*x2", 2)}, 0);
  CHECK(has_no_common_zero(d));
}

TEST_CASE("random ideals satisfy Buchberger's criterion")
{
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 2;
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2 + trial % 2; ++k) {
      auto p = random_poly(rng, n, 3);
      if (!p.is_zero())
        gens.push_back(p);
    }
    if (gens.empty())
      continue;
    CAPTURE(gens.front().str());
    auto b = buchberger(gens);
    check_reduced_groebner(gens, b);
    // Same ideal from a shuffled, rescaled generating set.
    std::vector<Polynomial> other(gens.rbegin(), gens.rend());
    other.front() = Rational(5, 2) * other.front();
    auto b2 = buchberger(other);
    CHECK(b2.polys == b.polys);
  }
}
