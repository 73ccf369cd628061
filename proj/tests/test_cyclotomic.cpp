#include <complex>
#include <numeric>
#include <random>

#include "doctest.h"

#include "alpharep/cyclotomic.hpp"
#include "alpharep/errors.hpp"
#include "alpharep/rational.hpp"

using namespace alpharep;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Random element of Q(zeta_n) with small coefficients, and its complex value.
struct Sample {
  Cyclotomic x;
  std::complex<double> z;
};

Sample random_element(std::mt19937 &rng, unsigned n)
{
  std::uniform_int_distribution<int> coeff(-3, 3), den(1, 3), terms(0, 4);
  std::uniform_int_distribution<long> expo(0, static_cast<long>(n) - 1);
  Sample s{Cyclotomic(0), {0, 0}};
  for (int t = terms(rng); t > 0; --t) {
    Rational c(coeff(rng), den(rng));
    long k = expo(rng);
    s.x += Cyclotomic(c) * Cyclotomic::zeta(n, k);
    s.z += c.convert_to<double>() * std::polar(1.0, 2 * kPi * static_cast<double>(k) / n);
  }
  return s;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

int mobius(unsigned n)
{
  int m = 1;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0)
        return 0;
      m = -m;
    }
  return n > 1 ? -m : m;
}

} // namespace

TEST_CASE("rational helpers")
{
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(-5, 10)) == "-1/2");
  CHECK(gcd_u64(84, 36) == 12);
  CHECK(lcm_u64(4, 6) == 12);
  CHECK(is_prime(2));
  CHECK(is_prime(43891));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(p_part(1344, 2) == 64);
  CHECK(prime_power(9) == std::pair<std::uint64_t, unsigned>{3, 2});
  CHECK(prime_power(6).first == 0);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("roots of unity")
{
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 9u, 12u, 15u}) {
    CAPTURE(n);
    auto z = Cyclotomic::zeta(n);
    Cyclotomic p(1);
    for (unsigned k = 0; k < n; ++k)
      p *= z;
    CHECK(p == Cyclotomic(1));
    Cyclotomic all, prim;
    for (unsigned k = 0; k < n; ++k) {
      all += Cyclotomic::zeta(n, k);
      if (std::gcd(k, n) == 1)
        prim += Cyclotomic::zeta(n, k);
    }
    CHECK(all == Cyclotomic(n == 1 ? 1 : 0));
    CHECK(prim == Cyclotomic(mobius(n)));
  }
  CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(6, 3) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(10, 2) == Cyclotomic::zeta(5));
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(1) == 1);
}

TEST_CASE("conductor is minimal")
{
  auto z3 = Cyclotomic::zeta(3);
  CHECK((z3 + z3 * z3).is_rational());
  auto golden = Cyclotomic::zeta(5) + Cyclotomic::zeta(5, 4);
  CHECK(golden.conductor() == 5);
  auto s = Cyclotomic::zeta(8) + Cyclotomic::zeta(8, 7); // sqrt 2
  CHECK(s * s == Cyclotomic(2));
  CHECK(s.conductor() == 8);
  // sqrt(-3) has conductor 3.
  auto r = z3 - Cyclotomic::zeta(3, 2);
  CHECK(r * r == Cyclotomic(-3));
  CHECK(r.conductor() == 3);
}

TEST_CASE("parse and print round trip")
{
  for (std::string text : {"1", "-1/2", "E(5)", "1+E(5)^2+E(5)^3", "-E(5)^2-E(5)^3", "2*E(7)^3",
                           "E(3)-E(3)^2"}) {
    CAPTURE(text);
    auto x = parse_cyclotomic(text);
    CHECK(parse_cyclotomic(x.str()) == x);
  }
  CHECK(parse_cyclotomic("E(4)^2") == Cyclotomic(-1));
  CHECK(parse_cyclotomic("1+E(5)^2+E(5)^3") + parse_cyclotomic("-E(5)^2-E(5)^3") ==
        Cyclotomic(1));
  CHECK_THROWS_AS(parse_cyclotomic("E(0)"), ParseError);
  CHECK_THROWS_AS(parse_cyclotomic("E(5"), ParseError);
}

TEST_CASE("field arithmetic matches complex numbers")
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    unsigned n = std::vector<unsigned>{3, 4, 5, 7, 8, 9, 12, 15, 20}[trial % 9];
    unsigned m = std::vector<unsigned>{1, 3, 4, 5, 6}[trial % 5];
    auto a = random_element(rng, n), b = random_element(rng, m);
    CAPTURE(a.x.str());
    CAPTURE(b.x.str());
    CHECK(close((a.x + b.x).approx(), a.z + b.z));
    CHECK(close((a.x - b.x).approx(), a.z - b.z));
    CHECK(close((a.x * b.x).approx(), a.z * b.z));
    CHECK(close(conj(a.x).approx(), std::conj(a.z)));
    CHECK((a.x + b.x) - b.x == a.x);
    CHECK(a.x * b.x == b.x * a.x);
    if (!b.x.is_zero()) {
      CHECK((a.x / b.x) * b.x == a.x);
      CHECK(close((a.x / b.x).approx(), a.z / b.z));
    }
  }
}

TEST_CASE("Galois action is a field automorphism")
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    unsigned n = std::vector<unsigned>{5, 7, 8, 12}[trial % 4];
    auto a = random_element(rng, n).x, b = random_element(rng, n).x;
    for (long k = 1; k < static_cast<long>(n); ++k) {
      if (std::gcd(static_cast<unsigned long>(k), static_cast<unsigned long>(n)) != 1)
        continue;
      CHECK(galois_apply(a + b, k) == galois_apply(a, k) + galois_apply(b, k));
      CHECK(galois_apply(a * b, k) == galois_apply(a, k) * galois_apply(b, k));
    }
    CHECK(galois_apply(a, -1) == conj(a));
    CHECK(galois_apply(Cyclotomic::zeta(n), 2 * static_cast<long>(n) + 1) == Cyclotomic::zeta(n));
  }
}

TEST_CASE("rational integers")
{
  CHECK(to_rational_integer(Cyclotomic(7)) == 7);
  CHECK(to_rational_integer(Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2)) == -1);
  CHECK_THROWS(to_rational_integer(Cyclotomic(Rational(1, 2))));
  CHECK_THROWS(to_rational_integer(Cyclotomic::zeta(5)));
}
