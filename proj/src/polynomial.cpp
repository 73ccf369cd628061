#include "alpharep/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "alpharep/errors.hpp"

namespace alpharep {

bool GrevlexGreater::operator()(const Monomial &a, const Monomial &b) const
{
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db)
    return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i])
      return a[i] < b[i];
  return false;
}

unsigned total_degree(const Monomial &m)
{
  unsigned d = 0;
  for (auto e : m)
    d += e;
  return d;
}

bool divides(const Monomial &a, const Monomial &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

Monomial lcm(const Monomial &a, const Monomial &b)
{
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    m[i] = std::max(a[i], b[i]);
  return m;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational &c)
{
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i)
{
  if (i >= nvars)
    throw InvalidArgument("variable index out of range");
  Monomial m(nvars, 0);
  m[i] = 1;
  return monomial(m, 1);
}

Polynomial Polynomial::monomial(const Monomial &m, const Rational &c)
{
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const
{
  return t_.empty() || (t_.size() == 1 && total_degree(t_.begin()->first) == 0);
}

unsigned Polynomial::degree() const
{
  return t_.empty() ? 0 : total_degree(t_.begin()->first);
}

bool Polynomial::is_homogeneous() const
{
  for (const auto &[m, c] : t_)
    if (total_degree(m) != degree())
      return false;
  return true;
}

void Polynomial::add_term(const Monomial &m, const Rational &c)
{
  if (m.size() != n_)
    throw InvalidArgument("monomial has wrong number of variables");
  if (c == 0)
    return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0)
      t_.erase(it);
  }
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
  if (o.n_ != n_)
    throw InvalidArgument("polynomials have different variable counts");
  for (const auto &[m, c] : o.t_)
    add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
  if (o.n_ != n_)
    throw InvalidArgument("polynomials have different variable counts");
  for (const auto &[m, c] : o.t_)
    add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const
{
  Polynomial p(n_);
  for (const auto &[m, c] : t_)
    p.t_.emplace(m, -c);
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial &mono, const Rational &k) const
{
  Polynomial p(n_);
  if (k == 0)
    return p;
  for (const auto &[m, c] : t_) {
    Monomial e(n_);
    for (std::size_t i = 0; i < n_; ++i)
      e[i] = m[i] + mono[i];
    p.t_.emplace_hint(p.t_.end(), std::move(e), c * k);
  }
  return p;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
  if (a.n_ != b.n_)
    throw InvalidArgument("polynomials have different variable counts");
  Polynomial p(a.n_);
  for (const auto &[m, c] : b.t_)
    p += a.times_monomial(m, c);
  return p;
}

Polynomial operator*(const Rational &k, const Polynomial &a)
{
  return a.times_monomial(Monomial(a.n_, 0), k);
}

Polynomial Polynomial::monic() const
{
  if (t_.empty())
    return *this;
  return Rational(1) / leading_coefficient() * *this;
}

Rational Polynomial::evaluate(const std::vector<Rational> &x) const
{
  if (x.size() != n_)
    throw InvalidArgument("evaluation point has wrong dimension");
  Rational s = 0;
  for (const auto &[m, c] : t_) {
    Rational t = c;
    for (std::size_t i = 0; i < n_; ++i)
      for (unsigned e = 0; e < m[i]; ++e)
        t *= x[i];
    s += t;
  }
  return s;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational &value) const
{
  if (var >= n_)
    throw InvalidArgument("variable index " + std::to_string(var + 1) + " out of range");
  Polynomial p(n_);
  for (const auto &[m, c] : t_) {
    Rational k = c;
    for (unsigned e = 0; e < m[var]; ++e)
      k *= value;
    Monomial r = m;
    r[var] = 0;
    p.add_term(r, k);
  }
  return p;
}

std::string Polynomial::str() const
{
  if (t_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : t_) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool unit = total_degree(m) == 0;
    bool need_star = false;
    if (a != 1 || unit) {
      os << to_string(a);
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i])
        continue;
      os << (need_star ? "*" : "") << "x" << i + 1;
      if (m[i] > 1)
        os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

namespace {

struct RawTerm {
  Rational c;
  std::map<std::size_t, unsigned> vars; // 0-based
};

class PolyParser {
public:
  explicit PolyParser(const std::string &s) : s_(s) {}

  std::vector<RawTerm> parse()
  {
    std::vector<RawTerm> out;
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      RawTerm t = term();
      t.c *= sign;
      out.push_back(std::move(t));
      skip();
    }
    if (first)
      fail("empty polynomial");
    return out;
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, pos_); }

  unsigned long number()
  {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + static_cast<unsigned long>(s_[pos_++] - '0');
    return v;
  }

  RawTerm term()
  {
    RawTerm t{1, {}};
    for (;;) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')
          ++pos_;
        try {
          t.c *= parse_rational(s_.substr(start, pos_ - start));
        } catch (const std::exception &) {
          pos_ = start;
          fail("bad rational");
        }
      } else if (peek() == 'x') {
        ++pos_;
        auto idx = number();
        if (idx == 0)
          fail("variables start at x1");
        unsigned e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          e = static_cast<unsigned>(number());
        }
        t.vars[idx - 1] += e;
      } else {
        fail("expected a coefficient or variable");
      }
      skip();
      if (peek() != '*')
        return t;
      ++pos_;
    }
  }

  const std::string &s_;
  std::size_t pos_ = 0;
};

Polynomial build(const std::vector<RawTerm> &raw, std::size_t nvars)
{
  Polynomial p(nvars);
  for (const auto &t : raw) {
    Monomial m(nvars, 0);
    for (auto [v, e] : t.vars) {
      if (v >= nvars)
        throw ParseError("variable x" + std::to_string(v + 1) + " exceeds " +
                         std::to_string(nvars) + " variables");
      m[v] += e;
    }
    p.add_term(m, t.c);
  }
  return p;
}

std::size_t max_var(const std::vector<RawTerm> &raw)
{
  std::size_t n = 0;
  for (const auto &t : raw)
    for (auto [v, e] : t.vars)
      n = std::max(n, v + 1);
  return n;
}

} // namespace

Polynomial parse_polynomial(const std::string &text, std::size_t nvars)
{
  auto raw = PolyParser(text).parse();
  return build(raw, nvars ? nvars : std::max<std::size_t>(1, max_var(raw)));
}

std::vector<Polynomial> parse_polynomial_system(const std::string &text)
{
  std::vector<std::vector<RawTerm>> raws;
  std::istringstream is(text);
  std::string line;
  std::size_t n = 1;
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos)
      line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    raws.push_back(PolyParser(line).parse());
    n = std::max(n, max_var(raws.back()));
  }
  std::vector<Polynomial> out;
  for (const auto &r : raws)
    out.push_back(build(r, n));
  return out;
}

} // namespace alpharep
