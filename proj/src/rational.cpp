#include "alpharep/rational.hpp"

#include <vector>

#include "alpharep/errors.hpp"

namespace alpharep {

Rational parse_rational(const std::string &text)
{
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string::npos)
    throw ParseError("empty rational");
  std::string s = text.substr(b, e - b + 1);
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-')
    ++i;
  bool slash = false;
  bool digit = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digit = true;
    } else if (s[i] == '/' && !slash && digit) {
      slash = true;
      digit = false;
    } else {
      throw ParseError("bad rational '" + s + "'", i);
    }
  }
  if (!digit)
    throw ParseError("bad rational '" + s + "'");
  if (s[0] == '+')
    s = s.substr(1);
  auto pos = s.find('/');
  if (pos != std::string::npos && Integer(s.substr(pos + 1)) == 0)
    throw ParseError("zero denominator in '" + s + "'");
  return Rational(s);
}

std::string to_string(const Rational &q)
{
  return q.str();
}

bool is_integer(const Rational &q)
{
  return boost::multiprecision::denominator(q) == 1;
}

std::int64_t to_int64(const Rational &q)
{
  if (!is_integer(q))
    throw DataError("expected an integer, got " + q.str());
  Integer n = boost::multiprecision::numerator(q);
  if (n > Integer(INT64_MAX) || n < Integer(INT64_MIN))
    throw DataError("integer out of range: " + n.str());
  return n.convert_to<std::int64_t>();
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b)
{
  if (a == 0 || b == 0)
    return 0;
  return a / gcd_u64(a, b) * b;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p)
{
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n)
{
  auto ps = prime_divisors(n);
  if (ps.size() != 1)
    return {0, 0};
  unsigned k = 0;
  while (n > 1) {
    n /= ps[0];
    ++k;
  }
  return {ps[0], k};
}

} // namespace alpharep
