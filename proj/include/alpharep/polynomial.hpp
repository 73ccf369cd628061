#pragma once

#include <map>
#include <string>
#include <vector>

#include "alpharep/rational.hpp"

namespace alpharep {

using Monomial = std::vector<unsigned>;

// Graded reverse lexicographic; true when a precedes b in descending order.
struct GrevlexGreater {
  bool operator()(const Monomial &a, const Monomial &b) const;
};

unsigned total_degree(const Monomial &m);
bool divides(const Monomial &a, const Monomial &b);
Monomial lcm(const Monomial &a, const Monomial &b);

// Sparse polynomial over Q in variables x1..xn; no zero coefficients stored.
class Polynomial {
public:
  using Terms = std::map<Monomial, Rational, GrevlexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : n_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational &c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Monomial &m, const Rational &c);

  std::size_t nvars() const { return n_; }
  const Terms &terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  unsigned degree() const;
  bool is_homogeneous() const;

  // Requires a nonzero polynomial.
  const Monomial &leading_monomial() const { return t_.begin()->first; }
  const Rational &leading_coefficient() const { return t_.begin()->second; }

  void add_term(const Monomial &m, const Rational &c);
  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(const Rational &c, const Polynomial &a);
  Polynomial times_monomial(const Monomial &m, const Rational &c) const;
  friend bool operator==(const Polynomial &a, const Polynomial &b)
  {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

  Polynomial monic() const;
  Rational evaluate(const std::vector<Rational> &x) const;
  // x_var := value
  Polynomial substitute(std::size_t var, const Rational &value) const;

  // "3/5*x1^2*x3 - x2"
  std::string str() const;

private:
  std::size_t n_;
  Terms t_;
};

// Variables are x1, x2, ...; nvars 0 means the largest index used.
Polynomial parse_polynomial(const std::string &text, std::size_t nvars = 0);
// One polynomial per non-empty line, '#' comments; common variable count.
std::vector<Polynomial> parse_polynomial_system(const std::string &text);

} // namespace alpharep
