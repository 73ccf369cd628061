#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace alpharep {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

Rational parse_rational(const std::string &text);
std::string to_string(const Rational &q);

bool is_integer(const Rational &q);
// Throws DataError when q is not a machine-size integer.
std::int64_t to_int64(const Rational &q);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);
// Prime factors in increasing order, without multiplicity.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
// Returns (p, k) with n = p^k, or (0, 0) when n is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n);

} // namespace alpharep
