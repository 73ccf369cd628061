#include "alpharep/groebner.hpp"

#include <algorithm>
#include <set>

#include "alpharep/errors.hpp"

namespace alpharep {

Polynomial reduce(const Polynomial &f, const std::vector<Polynomial> &g)
{
  Polynomial rem(f.nvars());
  Polynomial p = f;
  while (!p.is_zero()) {
    const Monomial &lm = p.leading_monomial();
    bool hit = false;
    for (const auto &q : g) {
      if (q.is_zero() || !divides(q.leading_monomial(), lm))
        continue;
      Monomial shift(lm.size());
      for (std::size_t i = 0; i < lm.size(); ++i)
        shift[i] = lm[i] - q.leading_monomial()[i];
      p -= q.times_monomial(shift, p.leading_coefficient() / q.leading_coefficient());
      hit = true;
      break;
    }
    if (!hit) {
      rem.add_term(lm, p.leading_coefficient());
      p -= Polynomial::monomial(lm, p.leading_coefficient());
    }
  }
  return rem;
}

namespace {

Polynomial s_polynomial(const Polynomial &a, const Polynomial &b)
{
  Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
  Monomial ua(l.size()), ub(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    ua[i] = l[i] - a.leading_monomial()[i];
    ub[i] = l[i] - b.leading_monomial()[i];
  }
  return a.times_monomial(ua, Rational(1) / a.leading_coefficient()) -
         b.times_monomial(ub, Rational(1) / b.leading_coefficient());
}

bool coprime(const Monomial &a, const Monomial &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i])
      return false;
  return true;
}

using Pair = std::pair<std::size_t, std::size_t>; // i < j

Pair ordered(std::size_t i, std::size_t j) { return i < j ? Pair{i, j} : Pair{j, i}; }

std::vector<Polynomial> interreduce(std::vector<Polynomial> g)
{
  std::sort(g.begin(), g.end(), [](const Polynomial &a, const Polynomial &b) {
    return GrevlexGreater{}(b.leading_monomial(), a.leading_monomial());
  });
  // Drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> min;
  for (const auto &p : g) {
    bool redundant = false;
    for (const auto &q : min)
      if (divides(q.leading_monomial(), p.leading_monomial()))
        redundant = true;
    if (!redundant)
      min.push_back(p);
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < min.size(); ++j)
      if (j != i)
        others.push_back(min[j]);
    out.push_back(reduce(min[i], others).monic());
  }
  return out;
}

} // namespace

IdealBasis buchberger(const std::vector<Polynomial> &generators)
{
  IdealBasis r;
  std::vector<Polynomial> g;
  std::size_t n = generators.empty() ? 1 : generators.front().nvars();
  for (const auto &p : generators) {
    if (p.nvars() != n)
      throw InvalidArgument("generators have different variable counts");
    if (!p.is_zero())
      g.push_back(p.monic());
  }
  if (g.empty()) {
    r.groebner = true;
    return r;
  }

  std::set<Pair> pending;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      pending.insert({i, j});

  auto pair_lcm = [&](const Pair &p) {
    return lcm(g[p.first].leading_monomial(), g[p.second].leading_monomial());
  };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = pending.begin();
    Monomial best_l = pair_lcm(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = pair_lcm(*it);
      if (GrevlexGreater{}(best_l, l)) {
        best = it;
        best_l = std::move(l);
      }
    }
    Pair p = *best;
    pending.erase(best);
    const Polynomial &a = g[p.first];
    const Polynomial &b = g[p.second];

    if (coprime(a.leading_monomial(), b.leading_monomial())) {
      ++r.pairs_skipped;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.first || k == p.second)
        continue;
      if (divides(g[k].leading_monomial(), best_l) && !pending.count(ordered(p.first, k)) &&
          !pending.count(ordered(p.second, k)))
        chain = true;
    }
    if (chain) {
      ++r.pairs_skipped;
      continue;
    }

    ++r.pairs_reduced;
    Polynomial h = reduce(s_polynomial(a, b), g);
    if (h.is_zero())
      continue;
    if (h.is_constant()) {
      r.polys = {Polynomial::constant(n, 1)};
      r.groebner = true;
      return r;
    }
    g.push_back(h.monic());
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
      pending.insert({i, g.size() - 1});
  }
  r.polys = interreduce(std::move(g));
  r.groebner = true;
  return r;
}

bool has_no_common_zero(const std::vector<Polynomial> &generators)
{
  auto b = buchberger(generators);
  return b.polys.size() == 1 && b.polys.front().is_constant() && !b.polys.front().is_zero();
}

std::vector<Polynomial> dehomogenize(const std::vector<Polynomial> &system, std::size_t k)
{
  std::vector<Polynomial> out;
  out.reserve(system.size());
  for (const auto &p : system)
    out.push_back(p.substitute(k, 1));
  return out;
}

bool ideal_member(const Polynomial &f, const IdealBasis &basis)
{
  if (!basis.groebner)
    throw InvalidArgument("membership test needs a Groebner basis");
  return reduce(f, basis.polys).is_zero();
}

} // namespace alpharep
