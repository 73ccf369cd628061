#include "alpharep/dixon.hpp"

#include <algorithm>
#include <cmath>

#include "alpharep/errors.hpp"
#include "alpharep/finite_group.hpp"
#include "alpharep/rational.hpp"

namespace alpharep {

namespace {

using u64 = std::uint64_t;
using Row = std::vector<u64>;

struct Field {
  u64 q;
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((unsigned __int128)a * b % q); }
  u64 add(u64 a, u64 b) const { return (a + b) % q; }
  u64 sub(u64 a, u64 b) const { return (a + q - b) % q; }
  u64 pow(u64 a, u64 e) const
  {
    u64 r = 1;
    a %= q;
    while (e) {
      if (e & 1)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, q - 2); }
};

// Rows in reduced echelon form; returns pivot columns.
std::vector<std::size_t> echelon(const Field &f, std::vector<Row> &m)
{
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[p], m[row]);
    u64 iv = f.inv(m[row][c]);
    for (auto &x : m[row])
      x = f.mul(x, iv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0)
        continue;
      u64 s = m[r][c];
      for (std::size_t k = 0; k < cols; ++k)
        m[r][k] = f.sub(m[r][k], f.mul(s, m[row][k]));
    }
    piv.push_back(c);
    ++row;
  }
  m.resize(row);
  return piv;
}

// Basis of {x : a x = 0} for a square matrix a.
std::vector<Row> kernel(const Field &f, std::vector<Row> a)
{
  std::size_t n = a.size();
  auto piv = echelon(f, a);
  std::vector<bool> is_piv(n, false);
  for (auto p : piv)
    is_piv[p] = true;
  std::vector<Row> out;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_piv[fc])
      continue;
    Row v(n, 0);
    v[fc] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = f.sub(0, a[r][fc]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial, coefficients from the constant term up.
// Hessenberg reduction, valid in every characteristic.
Row charpoly(const Field &f, std::vector<Row> h)
{
  const std::size_t d = h.size();
  for (std::size_t m = 1; m + 1 < d; ++m) {
    std::size_t p = m;
    while (p < d && h[p][m - 1] == 0)
      ++p;
    if (p == d)
      continue;
    if (p != m) {
      std::swap(h[p], h[m]);
      for (auto &row : h)
        std::swap(row[p], row[m]);
    }
    u64 iv = f.inv(h[m][m - 1]);
    for (std::size_t i = m + 1; i < d; ++i) {
      u64 u = f.mul(h[i][m - 1], iv);
      if (u == 0)
        continue;
      for (std::size_t j = 0; j < d; ++j)
        h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
      for (std::size_t j = 0; j < d; ++j)
        h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
    }
  }
  // p_k = charpoly of the leading k x k block.
  std::vector<Row> p(d + 1);
  p[0] = Row{1};
  for (std::size_t k = 1; k <= d; ++k) {
    Row c(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      c[i + 1] = f.add(c[i + 1], p[k - 1][i]);
      c[i] = f.sub(c[i], f.mul(h[k - 1][k - 1], p[k - 1][i]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h[k - i][k - i - 1]);
      u64 s = f.mul(t, h[k - i - 1][k - 1]);
      for (std::size_t j = 0; j < p[k - i - 1].size(); ++j)
        c[j] = f.sub(c[j], f.mul(s, p[k - i - 1][j]));
    }
    p[k] = std::move(c);
  }
  return p[d];
}

u64 primitive_root(const Field &f)
{
  auto ps = prime_divisors(f.q - 1);
  for (u64 g = 2; g < f.q; ++g) {
    bool ok = true;
    for (auto p : ps)
      if (f.pow(g, (f.q - 1) / p) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return g;
  }
  throw DataError("no primitive root mod " + std::to_string(f.q));
}

} // namespace

u64 dixon_prime(u64 exponent, u64 order)
{
  for (u64 q = exponent + 1;; q += exponent)
    if (is_prime(q) && (unsigned __int128)q * q > (unsigned __int128)4 * order)
      return q;
}

TablePtr compute_table_dixon(const PermGroup &g)
{
  if (g.order() > bounds().dixon)
    throw BoundExceeded("group order " + std::to_string(g.order()) + " exceeds Dixon bound " +
                        std::to_string(bounds().dixon));
  const FiniteGroup &fg = g.enumerated();
  fg.ensure_table();
  const std::size_t r = fg.class_count();
  const u64 n = fg.order();

  // cnt[i][j][k] = #{x in C_i : x^-1 z_k in C_j}
  std::vector<std::vector<Row>> cnt(r, std::vector<Row>(r, Row(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (auto x : fg.class_members(i)) {
      auto xi = fg.inv(x);
      for (std::size_t k = 0; k < r; ++k)
        ++cnt[i][fg.class_of(fg.mul(xi, fg.class_rep(k)))][k];
    }

  const u64 e = fg.exponent();
  const Field f{dixon_prime(e, n)};

  // Common eigenvectors of all class matrices.
  std::vector<std::vector<Row>> spaces;
  {
    std::vector<Row> id(r, Row(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      id[i][i] = 1;
    spaces.push_back(std::move(id));
  }
  for (std::size_t i = 1; i < r; ++i) {
    std::vector<std::vector<Row>> next;
    for (auto &b : spaces) {
      if (b.size() == 1) {
        next.push_back(std::move(b));
        continue;
      }
      auto piv = echelon(f, b);
      std::size_t d = b.size();
      std::vector<Row> t(d, Row(d, 0));
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t a = 0; a < d; ++a) {
          std::size_t j = piv[a];
          u64 v = 0;
          for (std::size_t k = 0; k < r; ++k)
            v = f.add(v, f.mul(cnt[i][j][k] % f.q, b[s][k]));
          t[a][s] = v;
        }
      Row cp = charpoly(f, t);
      std::size_t covered = 0;
      for (u64 lam = 0; lam < f.q && covered < d; ++lam) {
        u64 val = 0;
        for (std::size_t k = cp.size(); k-- > 0;)
          val = f.add(f.mul(val, lam), cp[k]);
        if (val != 0)
          continue;
        auto tl = t;
        for (std::size_t a = 0; a < d; ++a)
          tl[a][a] = f.sub(tl[a][a], lam);
        std::vector<Row> sub;
        for (const auto &u : kernel(f, tl)) {
          Row w(r, 0);
          for (std::size_t s = 0; s < d; ++s)
            for (std::size_t k = 0; k < r; ++k)
              w[k] = f.add(w[k], f.mul(u[s], b[s][k]));
          sub.push_back(std::move(w));
        }
        covered += sub.size();
        next.push_back(std::move(sub));
      }
      if (covered != d)
        throw DataError("class matrices do not split over F_" + std::to_string(f.q));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r)
    throw DataError("Dixon splitting produced " + std::to_string(spaces.size()) +
                    " characters for " + std::to_string(r) + " classes");

  const u64 ze = f.pow(primitive_root(f), (f.q - 1) / e);
  auto out = std::make_shared<CharacterTable>();
  out->name = g.name();
  out->order = n;
  const auto &ccs = fg.classes();
  out->sizes = ccs.sizes;
  out->orders = ccs.orders;
  out->power_maps = ccs.power_map;
  out->class_reps = ccs.representatives;
  out->group = g;
  out->locator = enumerated_locator(g);

  std::vector<std::vector<std::size_t>> pcls(r);
  for (std::size_t k = 0; k < r; ++k)
    for (u64 l = 0; l < ccs.orders[k]; ++l)
      pcls[k].push_back(fg.power_class(k, static_cast<long>(l)));

  const u64 dmax = static_cast<u64>(std::sqrt(static_cast<double>(n))) + 1;
  for (const auto &sp : spaces) {
    Row w = sp[0];
    if (w[0] == 0)
      throw DataError("central character vanishes at the identity");
    u64 s0 = f.inv(w[0]);
    for (auto &x : w)
      x = f.mul(x, s0);
    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s = f.add(s, f.mul(f.mul(w[k], w[fg.inverse_class(k)]), f.inv(ccs.sizes[k] % f.q)));
    u64 d2 = f.mul(n % f.q, f.inv(s));
    u64 deg = 0;
    for (u64 d = 1; d <= dmax; ++d)
      if (d * d % f.q == d2 && n % d == 0) {
        deg = d;
        break;
      }
    if (deg == 0)
      throw DataError("no degree lifts from F_" + std::to_string(f.q));
    Row chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = f.mul(f.mul(deg % f.q, w[k]), f.inv(ccs.sizes[k] % f.q));
    std::vector<Cyclotomic> vals(r);
    for (std::size_t k = 0; k < r; ++k) {
      u64 o = ccs.orders[k];
      u64 zo = f.pow(ze, e / o);
      u64 zinv = f.inv(zo);
      u64 oinv = f.inv(o % f.q);
      Cyclotomic v;
      u64 total = 0;
      for (u64 t = 0; t < o; ++t) {
        u64 m = 0;
        for (u64 l = 0; l < o; ++l)
          m = f.add(m, f.mul(chi[pcls[k][l]], f.pow(zinv, t * l % o)));
        m = f.mul(m, oinv);
        if (m > deg)
          throw DataError("eigenvalue multiplicity does not lift from F_" + std::to_string(f.q));
        total += m;
        if (m)
          v += Cyclotomic(static_cast<long>(m)) * Cyclotomic::zeta(static_cast<unsigned>(o), static_cast<long>(t));
      }
      if (total != deg)
        throw DataError("eigenvalue multiplicities do not sum to the degree");
      vals[k] = std::move(v);
    }
    out->irr.push_back(std::move(vals));
  }

  auto is_trivial = [](const std::vector<Cyclotomic> &v) {
    return std::all_of(v.begin(), v.end(), [](const Cyclotomic &x) { return x == Cyclotomic(1); });
  };
  std::sort(out->irr.begin(), out->irr.end(), [&](const auto &a, const auto &b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb)
      return ta;
    if (a[0] != b[0])
      return a[0].rational() < b[0].rational();
    return a < b;
  });
  if (auto err = validate_table(*out); !err.empty())
    throw DataError("computed table fails validation: " + err);
  return out;
}

} // namespace alpharep
