#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "alpharep/rational.hpp"

namespace alpharep {

// An element of Q(zeta_n), stored in the power basis 1, z, ..., z^(phi(n)-1)
// modulo the n-th cyclotomic polynomial. The conductor is always the
// smallest one, so equal values have equal representations.
class Cyclotomic {
public:
  Cyclotomic() = default;
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(const Rational &q);

  // E(n)^k.
  static Cyclotomic zeta(unsigned n, long k = 1);

  unsigned conductor() const { return n_; }
  const std::vector<Rational> &coefficients() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return n_ == 1; }
  // Requires is_rational().
  Rational rational() const;

  Cyclotomic operator-() const;
  Cyclotomic &operator+=(const Cyclotomic &o);
  Cyclotomic &operator-=(const Cyclotomic &o);
  Cyclotomic &operator*=(const Cyclotomic &o);
  Cyclotomic &operator/=(const Cyclotomic &o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic &b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic &b) { return a /= b; }

  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b)
  {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  // Total order by (conductor, coefficients); not a field order.
  friend std::strong_ordering operator<=>(const Cyclotomic &a, const Cyclotomic &b);

  // Text in the E(n) grammar accepted by parse_cyclotomic.
  std::string str() const;
  std::complex<double> approx() const;

private:
  Cyclotomic(unsigned n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}

  // Coefficients over exponents 0..n-1 of zeta_n, reduced and minimised.
  static Cyclotomic from_exponents(unsigned n, const std::vector<Rational> &full);
  std::vector<Rational> exponents_in(unsigned m) const;
  void minimise();

  friend Cyclotomic galois_apply(const Cyclotomic &a, long k);

  unsigned n_ = 1;
  // Empty means zero.
  std::vector<Rational> c_;
};

// Grammar: sums and products of rationals and E(n), with ^, /, parentheses.
Cyclotomic parse_cyclotomic(const std::string &text);

// zeta -> zeta^-1.
Cyclotomic conj(const Cyclotomic &a);
// zeta -> zeta^k; k must be coprime to the conductor.
Cyclotomic galois_apply(const Cyclotomic &a, long k);
// Throws DataError unless a is a rational integer.
std::int64_t to_rational_integer(const Cyclotomic &a);

unsigned euler_phi(unsigned n);

} // namespace alpharep

namespace Eigen {

template <>
struct NumTraits<alpharep::Cyclotomic> : GenericNumTraits<alpharep::Cyclotomic> {
  using Real = alpharep::Cyclotomic;
  using NonInteger = alpharep::Cyclotomic;
  using Nested = alpharep::Cyclotomic;
  using Literal = alpharep::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 100
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

} // namespace Eigen
