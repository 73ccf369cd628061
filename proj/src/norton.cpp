#include "alpharep/norton.hpp"

#include <algorithm>
#include <numeric>

#include "alpharep/actions.hpp"
#include "alpharep/alpha.hpp"
#include "alpharep/errors.hpp"

namespace alpharep {

namespace {

std::size_t pair_index(const NortonAlgebra &a, std::size_t i, std::size_t j)
{
  if (i > j)
    std::swap(i, j);
  // lexicographic position of {i, j}
  return i * a.n - i * (i + 1) / 2 + (j - i - 1);
}

// Permutation of U induced by a point permutation.
MatQ permute_u(const NortonAlgebra &a, const Permutation &s)
{
  auto m = static_cast<Eigen::Index>(a.pairs.size());
  MatQ out = MatQ::Zero(m, m);
  for (std::size_t c = 0; c < a.pairs.size(); ++c) {
    auto [i, j] = a.pairs[c];
    auto r = pair_index(a, s(static_cast<Permutation::Point>(i)),
                        s(static_cast<Permutation::Point>(j)));
    out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 1;
  }
  return out;
}

std::vector<Rational> permute_z(const Permutation &s, const std::vector<Rational> &z)
{
  std::vector<Rational> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    out[s(static_cast<Permutation::Point>(i))] = z[i];
  return out;
}

std::vector<Rational> unit_w(std::size_t n, std::size_t i)
{
  std::vector<Rational> z(n, 0);
  z[i] = 1;
  z[n - 1] = -1;
  return z;
}

std::vector<Permutation> sn_generators(std::size_t n)
{
  return symmetric_group(n).generators();
}

std::uint64_t multinomial_orbit(const std::vector<std::int64_t> &v)
{
  // n! / prod (multiplicity!)
  std::vector<std::int64_t> s = v;
  std::sort(s.begin(), s.end());
  Integer num = 1;
  for (std::size_t i = 2; i <= s.size(); ++i)
    num *= i;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i])
      ++j;
    for (std::size_t f = 2; f <= j - i; ++f)
      num /= f;
    i = j;
  }
  return static_cast<std::uint64_t>(num);
}

bool negation_in_orbit(const std::vector<std::int64_t> &v)
{
  std::vector<std::int64_t> a = v, b;
  for (auto x : v)
    b.push_back(-x);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

} // namespace

NortonAlgebra norton_build(std::size_t n)
{
  if (n < 3)
    throw InvalidArgument("Norton algebra needs n >= 3");
  NortonAlgebra a;
  a.n = n;
  a.pairs = two_subsets(n);
  auto m = static_cast<Eigen::Index>(a.pairs.size());
  auto nn = static_cast<Eigen::Index>(n);
  a.f = MatQ::Zero(m, nn);
  for (std::size_t c = 0; c < a.pairs.size(); ++c) {
    a.f(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(a.pairs[c].first)) = 1;
    a.f(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(a.pairs[c].second)) = 1;
  }
  a.gram = a.f.transpose() * a.f;
  auto ginv = inverse<Rational>(a.gram);
  if (!ginv)
    throw DataError("f_1..f_n are dependent");
  a.f_coordinates = *ginv * a.f.transpose();
  // W basis f_i - f_n, i < n
  MatQ b(m, nn - 1);
  for (Eigen::Index i = 0; i + 1 < nn; ++i)
    b.col(i) = a.f.col(i) - a.f.col(nn - 1);
  MatQ bt = b.transpose();
  auto binv = inverse<Rational>(MatQ(bt * b));
  a.projection = b * (*binv) * bt;
  return a;
}

VecQ norton_embed(const NortonAlgebra &a, const std::vector<Rational> &z)
{
  if (z.size() != a.n)
    throw InvalidArgument("vector has wrong length");
  Rational s = 0;
  VecQ v(static_cast<Eigen::Index>(a.n));
  for (std::size_t i = 0; i < a.n; ++i) {
    s += z[i];
    v(static_cast<Eigen::Index>(i)) = z[i];
  }
  if (s != 0)
    throw InvalidArgument("coordinates of a vector of W must sum to 0");
  return a.f * v;
}

std::vector<Rational> norton_product(const NortonAlgebra &a, const std::vector<Rational> &z1,
                                     const std::vector<Rational> &z2)
{
  VecQ u = norton_embed(a, z1).cwiseProduct(norton_embed(a, z2));
  VecQ y = a.f_coordinates * (a.projection * u);
  return std::vector<Rational>(y.data(), y.data() + y.size());
}

std::vector<Rational> norton_square_closed_form(std::size_t n, const std::vector<Rational> &z)
{
  Rational s2 = 0;
  for (const auto &x : z)
    s2 += x * x;
  Rational c = Rational(static_cast<long>(n) - 4, static_cast<long>(n) - 2);
  std::vector<Rational> out;
  for (const auto &x : z)
    out.push_back(c * (x * x - s2 / Rational(static_cast<long>(n))));
  return out;
}

std::vector<Polynomial> norton_square_polynomials(const NortonAlgebra &a)
{
  std::size_t v = a.n - 1;
  std::vector<Polynomial> z;
  for (std::size_t i = 0; i < v; ++i)
    z.push_back(Polynomial::variable(v, i));
  Polynomial last(v);
  for (const auto &x : z)
    last -= x;
  z.push_back(last);
  // (w.w)_{ij} = (z_i + z_j)^2
  std::vector<Polynomial> u;
  for (auto [i, j] : a.pairs) {
    Polynomial s = z[i] + z[j];
    u.push_back(s * s);
  }
  MatQ y = a.f_coordinates * a.projection;
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < v; ++k) {
    Polynomial p(v);
    for (std::size_t c = 0; c < u.size(); ++c) {
      const Rational &coef = y(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(c));
      if (coef != 0)
        p += coef * u[c];
    }
    out.push_back(std::move(p));
  }
  return out;
}

NortonIdentities check_norton_identities(const NortonAlgebra &a)
{
  NortonIdentities r;
  const MatQ &p = a.projection;
  r.projection_idempotent = p * p == p;
  r.identity_on_w = true;
  for (std::size_t i = 0; i + 1 < a.n; ++i) {
    VecQ w = norton_embed(a, unit_w(a.n, i));
    if (p * w != w)
      r.identity_on_w = false;
  }
  r.projection_equivariant = true;
  r.f_equivariant = true;
  r.product_equivariant = true;
  for (const auto &s : sn_generators(a.n)) {
    MatQ g = permute_u(a, s);
    if (g * p != p * g)
      r.projection_equivariant = false;
    for (std::size_t i = 0; i < a.n; ++i)
      if (g * a.f.col(static_cast<Eigen::Index>(i)) !=
          a.f.col(static_cast<Eigen::Index>(s(static_cast<Permutation::Point>(i)))))
        r.f_equivariant = false;
    for (std::size_t i = 0; i + 1 < a.n; ++i)
      for (std::size_t j = i; j + 1 < a.n; ++j) {
        auto zi = unit_w(a.n, i), zj = unit_w(a.n, j);
        auto lhs = permute_z(s, norton_product(a, zi, zj));
        auto rhs = norton_product(a, permute_z(s, zi), permute_z(s, zj));
        if (lhs != rhs)
          r.product_equivariant = false;
      }
  }
  r.commutative = true;
  for (std::size_t i = 0; i + 1 < a.n; ++i)
    for (std::size_t j = i + 1; j + 1 < a.n; ++j)
      if (norton_product(a, unit_w(a.n, i), unit_w(a.n, j)) !=
          norton_product(a, unit_w(a.n, j), unit_w(a.n, i)))
        r.commutative = false;
  r.ok = r.projection_idempotent && r.identity_on_w && r.projection_equivariant &&
         r.f_equivariant && r.commutative && r.product_equivariant;
  return r;
}

NortonNilpotents norton_nilpotents(std::size_t n)
{
  NortonAlgebra a = norton_build(n);
  NortonNilpotents r;
  r.n = n;

  // <w.w, f_k> against (n-4) z_k^2 + sigma_2, both on the free coordinates.
  std::size_t v = n - 1;
  std::vector<Polynomial> z;
  for (std::size_t i = 0; i < v; ++i)
    z.push_back(Polynomial::variable(v, i));
  Polynomial last(v);
  for (const auto &x : z)
    last -= x;
  z.push_back(last);
  Polynomial sigma2(v);
  for (const auto &x : z)
    sigma2 += x * x;
  std::vector<Polynomial> u;
  for (auto [i, j] : a.pairs) {
    Polynomial s = z[i] + z[j];
    u.push_back(s * s);
  }
  r.identity_verified = true;
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial lhs(v);
    for (std::size_t c = 0; c < u.size(); ++c)
      if (a.f(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(k)) != 0)
        lhs += u[c];
    Polynomial rhs = Rational(static_cast<long>(n) - 4) * (z[k] * z[k]) + sigma2;
    if (!(lhs == rhs))
      r.identity_verified = false;
  }

  r.degenerate = n == 4;
  if (n % 2 == 1) {
    // z_k^2 constant with sum z_k = 0 needs equally many +a and -a entries.
    r.none = true;
    r.description = "none: z_k^2 = sigma_2/n with sum z_k = 0 forces z = 0 for odd n";
    return r;
  }
  r.family_verified = true;
  std::vector<int> pattern(n, -1);
  std::fill(pattern.begin(), pattern.begin() + static_cast<long>(n / 2), 1);
  std::sort(pattern.begin(), pattern.end());
  do {
    std::vector<Rational> w(pattern.begin(), pattern.end());
    VecQ u2 = norton_embed(a, w).cwiseProduct(norton_embed(a, w));
    if (!is_zero_matrix<Rational>(a.projection * u2))
      r.family_verified = false;
    r.family.push_back(pattern);
  } while (std::next_permutation(pattern.begin(), pattern.end()));
  std::reverse(r.family.begin(), r.family.end());
  r.description = "c * (sum_{i in I} f_i - sum_{i not in I} f_i), |I| = n/2";
  if (r.degenerate)
    r.description += "; for n = 4 every w in W satisfies w * w = 0";
  return r;
}

WitnessOrbits sn_witness_orbits(std::size_t n, bool crosscheck)
{
  auto [p, k] = prime_power(n);
  if (!p || p == 2 || n <= 3)
    throw InvalidArgument("witness orbits need an odd prime power n > 3");
  WitnessOrbits r;
  r.n = n;
  r.p = p;
  r.k = k;
  r.x.assign(n, -1);
  r.x[0] = static_cast<std::int64_t>(n) - 1;
  std::uint64_t a = n / p; // p^{k-1} entries p-1, the rest -1
  r.y.assign(n, -1);
  for (std::uint64_t i = 0; i < a; ++i)
    r.y[i] = static_cast<std::int64_t>(p) - 1;
  r.orbit_x = multinomial_orbit(r.x);
  r.orbit_y = multinomial_orbit(r.y);
  r.orbit_x_minus = negation_in_orbit(r.x) ? r.orbit_x : 2 * r.orbit_x;
  r.orbit_y_minus = negation_in_orbit(r.y) ? r.orbit_y : 2 * r.orbit_y;
  r.gcd_v = gcd_u64(r.orbit_x, r.orbit_y);
  r.gcd_vminus = gcd_u64(r.orbit_x_minus, r.orbit_y_minus);
  r.alpha_v = p;
  r.alpha_vminus = 2 * p;
  r.ok = r.gcd_v == p && r.gcd_vminus == 2 * p;
  if (crosscheck) {
    PermGroup g = symmetric_group(n);
    r.computed_alpha_v = alpha(g, *natural_augmentation(false)).alpha;
    r.computed_alpha_vminus = alpha(g, *natural_augmentation(true)).alpha;
    r.ok = r.ok && *r.computed_alpha_v == p && *r.computed_alpha_vminus == 2 * p;
  }
  return r;
}

} // namespace alpharep
