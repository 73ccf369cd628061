#include "alpharep/char_table.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "alpharep/errors.hpp"
#include "alpharep/finite_group.hpp"
#include "alpharep/rational.hpp"

namespace alpharep {

namespace {

class EnumeratedLocator : public ClassLocator {
public:
  explicit EnumeratedLocator(PermGroup g) : g_(std::move(g)) {}
  std::vector<std::size_t> locate(const std::vector<Permutation> &elems) const override
  {
    const FiniteGroup &fg = g_.enumerated();
    std::vector<std::size_t> out;
    out.reserve(elems.size());
    for (const auto &x : elems)
      out.push_back(fg.class_of(fg.index_of(x)));
    return out;
  }

private:
  PermGroup g_;
};

std::size_t power_class_impl(const std::vector<std::uint64_t> &orders,
                             const std::map<std::uint64_t, std::vector<std::size_t>> &pm,
                             std::size_t k, long e)
{
  auto o = static_cast<long>(orders[k]);
  long m = ((e % o) + o) % o;
  if (m == 0)
    return static_cast<std::size_t>(
        std::find(orders.begin(), orders.end(), 1ULL) - orders.begin());
  std::size_t c = k;
  auto rest = static_cast<std::uint64_t>(m);
  for (std::uint64_t p : prime_divisors(rest)) {
    auto it = pm.find(p);
    while (rest % p == 0) {
      if (it == pm.end())
        throw DataError("missing power map for prime " + std::to_string(p));
      c = it->second[c];
      rest /= p;
    }
  }
  return c;
}

class PowerMapLocator : public ClassLocator {
public:
  PowerMapLocator(PermGroup g, std::vector<std::uint64_t> orders,
                  std::map<std::uint64_t, std::vector<std::size_t>> pm,
                  std::vector<Permutation> reps)
      : g_(std::move(g)), orders_(std::move(orders)), pm_(std::move(pm)), reps_(std::move(reps)),
        classes_(orders_.size())
  {
  }

  std::vector<std::size_t> locate(const std::vector<Permutation> &elems) const override
  {
    std::unordered_map<Permutation, std::size_t, PermutationHash> cache;
    std::vector<std::size_t> out;
    out.reserve(elems.size());
    for (const auto &x : elems)
      out.push_back(one(x, cache));
    return out;
  }

private:
  std::size_t one(const Permutation &x,
                  std::unordered_map<Permutation, std::size_t, PermutationHash> &cache) const
  {
    auto hit = cache.find(x);
    if (hit != cache.end())
      return hit->second;
    std::uint64_t o = x.order();
    std::vector<std::size_t> cand;
    for (std::size_t c = 0; c < orders_.size(); ++c)
      if (orders_[c] == o)
        cand.push_back(c);
    if (o > 1) {
      for (std::uint64_t p : prime_divisors(o)) {
        std::size_t cy = one(x.pow(static_cast<long>(p)), cache);
        auto it = pm_.find(p);
        if (it == pm_.end())
          throw DataError("missing power map for prime " + std::to_string(p));
        std::erase_if(cand, [&](std::size_t c) { return it->second[c] != cy; });
      }
    }
    if (cand.empty())
      throw DataError("element " + x.str() + " matches no class");
    std::size_t c0 = cand.front();
    if (!reps_.empty())
      c0 = separate(x, cand);
    std::set<std::size_t> orbit;
    for (std::uint64_t k = 1; k < std::max<std::uint64_t>(o, 2); ++k)
      if (gcd_u64(k, o) == 1)
        orbit.insert(power_class_impl(orders_, pm_, c0, static_cast<long>(k)));
    for (auto c : cand)
      if (!orbit.contains(c))
        throw DataError("classes of order " + std::to_string(o) +
                        " are not separated by power maps");
    for (std::uint64_t k = 1; k < std::max<std::uint64_t>(o, 2); ++k)
      if (gcd_u64(k, o) == 1)
        cache.emplace(x.pow(static_cast<long>(k)),
                      power_class_impl(orders_, pm_, c0, static_cast<long>(k)));
    return c0;
  }

  // Galois conjugate classes share order and power maps; test membership
  // in the conjugacy class of the chosen representative.
  std::size_t separate(const Permutation &x, const std::vector<std::size_t> &cand) const
  {
    for (std::size_t k = 0; k + 1 < cand.size(); ++k)
      if (conjugacy_class(cand[k]).contains(x))
        return cand[k];
    return cand.back();
  }

  const std::unordered_set<Permutation, PermutationHash> &conjugacy_class(std::size_t c) const
  {
    std::lock_guard lock(mutex_);
    auto &cls = classes_[c];
    if (!cls) {
      cls = std::make_unique<std::unordered_set<Permutation, PermutationHash>>();
      std::vector<Permutation> todo{reps_[c]};
      cls->insert(reps_[c]);
      while (!todo.empty()) {
        Permutation y = std::move(todo.back());
        todo.pop_back();
        for (const auto &s : g_.generators()) {
          Permutation z = s.inverse() * y * s;
          if (cls->insert(z).second)
            todo.push_back(std::move(z));
        }
      }
    }
    return *cls;
  }

  PermGroup g_;
  std::vector<std::uint64_t> orders_;
  std::map<std::uint64_t, std::vector<std::size_t>> pm_;
  std::vector<Permutation> reps_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<std::unordered_set<Permutation, PermutationHash>>> classes_;
};

void require_same(const ClassFunction &a, const ClassFunction &b)
{
  if (!a.table() || a.table() != b.table())
    throw InvalidArgument("class functions belong to different tables");
}

} // namespace

std::shared_ptr<ClassLocator> enumerated_locator(const PermGroup &g)
{
  return std::make_shared<EnumeratedLocator>(g);
}

std::shared_ptr<ClassLocator>
power_map_locator(const PermGroup &g, std::vector<std::uint64_t> orders,
                  std::map<std::uint64_t, std::vector<std::size_t>> power_maps,
                  std::vector<Permutation> class_reps)
{
  return std::make_shared<PowerMapLocator>(g, std::move(orders), std::move(power_maps),
                                           std::move(class_reps));
}

// ClassFunction

ClassFunction::ClassFunction(TablePtr t, std::vector<Cyclotomic> v)
    : t_(std::move(t)), v_(std::move(v))
{
  if (t_ && v_.size() != t_->class_count())
    throw InvalidArgument("class function length " + std::to_string(v_.size()) +
                          " does not match " + std::to_string(t_->class_count()) + " classes");
}

ClassFunction &ClassFunction::operator+=(const ClassFunction &o)
{
  require_same(*this, o);
  for (std::size_t k = 0; k < v_.size(); ++k)
    v_[k] += o.v_[k];
  return *this;
}

ClassFunction &ClassFunction::operator-=(const ClassFunction &o)
{
  require_same(*this, o);
  for (std::size_t k = 0; k < v_.size(); ++k)
    v_[k] -= o.v_[k];
  return *this;
}

ClassFunction operator*(const Cyclotomic &s, ClassFunction a)
{
  for (auto &x : a.v_)
    x *= s;
  return a;
}

std::string ClassFunction::str() const
{
  std::ostringstream os;
  for (std::size_t k = 0; k < v_.size(); ++k)
    os << (k ? " " : "") << v_[k].str();
  return os.str();
}

// CharacterTable

std::uint64_t CharacterTable::exponent() const
{
  std::uint64_t e = 1;
  for (auto o : orders)
    e = lcm_u64(e, o);
  return e;
}

std::size_t CharacterTable::power_class(std::size_t k, long e) const
{
  return power_class_impl(orders, power_maps, k, e);
}

std::size_t CharacterTable::inverse_class(std::size_t k) const
{
  return power_class(k, -1);
}

ClassFunction CharacterTable::irreducible(std::size_t i) const
{
  if (i >= irr.size())
    throw InvalidArgument("no irreducible " + std::to_string(i + 1) + " (table has " +
                          std::to_string(irr.size()) + ")");
  return ClassFunction(shared_from_this(), irr[i]);
}

ClassFunction CharacterTable::trivial() const
{
  return ClassFunction(shared_from_this(), std::vector<Cyclotomic>(class_count(), Cyclotomic(1)));
}

ClassFunction CharacterTable::make(std::vector<Cyclotomic> v) const
{
  return ClassFunction(shared_from_this(), std::move(v));
}

const std::vector<std::size_t> &CharacterTable::fusion_from(const TablePtr &sub) const
{
  std::lock_guard lock(fusion_mutex_);
  auto it = fusion_.find(sub.get());
  if (it != fusion_.end() && !it->second.first.expired())
    return it->second.second;
  if (!locator || !group)
    throw InvalidArgument("table " + name + " has no group realization for fusion");
  if (!sub->group || sub->class_reps.size() != sub->class_count())
    throw InvalidArgument("subgroup table " + sub->name + " has no class representatives");
  if (!sub->group->is_subgroup_of(*group))
    throw InvalidArgument(sub->name + " is not a subgroup of " + name);
  std::vector<std::size_t> f;
  for (const auto &r : sub->class_reps)
    f.push_back(locator->locate({r}).front());
  auto &slot = fusion_[sub.get()];
  slot = {sub, std::move(f)};
  return slot.second;
}

// Calculus

Cyclotomic inner(const ClassFunction &a, const ClassFunction &b)
{
  require_same(a, b);
  const auto &t = *a.table();
  Cyclotomic s;
  for (std::size_t k = 0; k < t.class_count(); ++k)
    s += Cyclotomic(static_cast<long>(t.sizes[k])) * a[k] * conj(b[k]);
  return s / Cyclotomic(Rational(Integer(t.order)));
}

std::int64_t inner_product(const ClassFunction &a, const ClassFunction &b)
{
  Cyclotomic s = inner(a, b);
  try {
    return to_rational_integer(s);
  } catch (const DataError &) {
    throw DataError("non-integral inner product " + s.str());
  }
}

std::vector<std::int64_t> decompose(const ClassFunction &chi)
{
  const auto &t = *chi.table();
  std::vector<std::int64_t> m;
  for (std::size_t i = 0; i < t.irreducible_count(); ++i)
    m.push_back(inner_product(chi, t.irreducible(i)));
  return m;
}

std::optional<std::size_t> find_irreducible(const ClassFunction &chi)
{
  const auto &t = *chi.table();
  for (std::size_t i = 0; i < t.irreducible_count(); ++i)
    if (t.irr[i] == chi.values())
      return i;
  return std::nullopt;
}

bool is_character(const ClassFunction &chi)
{
  try {
    for (auto m : decompose(chi))
      if (m < 0)
        return false;
  } catch (const DataError &) {
    return false;
  }
  return true;
}

ClassFunction restrict_to(const ClassFunction &chi, const TablePtr &sub)
{
  const auto &f = chi.table()->fusion_from(sub);
  std::vector<Cyclotomic> v;
  for (auto c : f)
    v.push_back(chi[c]);
  return ClassFunction(sub, std::move(v));
}

ClassFunction induce(const ClassFunction &omega, const TablePtr &ambient)
{
  const auto &h = *omega.table();
  const auto &f = ambient->fusion_from(omega.table());
  std::vector<Cyclotomic> v(ambient->class_count());
  for (std::size_t j = 0; j < h.class_count(); ++j)
    v[f[j]] += Cyclotomic(static_cast<long>(h.sizes[j])) * omega[j];
  for (std::size_t c = 0; c < v.size(); ++c)
    v[c] *= Cyclotomic(Rational(Integer(ambient->centralizer_order(c)), Integer(h.order)));
  return ClassFunction(ambient, std::move(v));
}

ClassFunction tensor(const ClassFunction &a, const ClassFunction &b)
{
  require_same(a, b);
  std::vector<Cyclotomic> v;
  for (std::size_t k = 0; k < a.size(); ++k)
    v.push_back(a[k] * b[k]);
  return ClassFunction(a.table(), std::move(v));
}

namespace {

ClassFunction square_part(const ClassFunction &chi, int sign)
{
  const auto &t = *chi.table();
  std::vector<Cyclotomic> v;
  for (std::size_t k = 0; k < chi.size(); ++k) {
    Cyclotomic sq = chi[t.power_class(k, 2)];
    v.push_back((chi[k] * chi[k] + Cyclotomic(sign) * sq) / Cyclotomic(2));
  }
  return ClassFunction(chi.table(), std::move(v));
}

} // namespace

ClassFunction sym_square(const ClassFunction &chi) { return square_part(chi, 1); }
ClassFunction alt_square(const ClassFunction &chi) { return square_part(chi, -1); }

ClassFunction sign_character(const TablePtr &t, const PermGroup &a)
{
  if (!t->group || t->class_reps.size() != t->class_count())
    throw InvalidArgument("sign character needs class representatives");
  if (!a.is_subgroup_of(*t->group) || 2 * a.order() != t->order)
    throw InvalidArgument("sign twist needs a subgroup of index 2");
  std::vector<Cyclotomic> v;
  for (const auto &r : t->class_reps)
    v.emplace_back(a.contains(r) ? 1 : -1);
  return ClassFunction(t, std::move(v));
}

ClassFunction sign_twist(const ClassFunction &chi, const PermGroup &a)
{
  return tensor(chi, sign_character(chi.table(), a));
}

ClassFunction permutation_character(const GroupAction &action, const TablePtr &t)
{
  if (t->class_reps.size() != t->class_count())
    throw InvalidArgument("permutation character needs class representatives");
  std::vector<Cyclotomic> v;
  for (const auto &r : t->class_reps)
    v.emplace_back(static_cast<long>(action.fixed_points(r)));
  return ClassFunction(t, std::move(v));
}

ClassFunction augmentation_character(const GroupAction &action, const TablePtr &t)
{
  ClassFunction pi = permutation_character(action, t);
  if (inner_product(pi, t->trivial()) != 1)
    throw InvalidArgument("augmentation character needs a transitive action");
  return pi - t->trivial();
}

std::vector<ClassFunction> galois_orbit(const ClassFunction &chi)
{
  std::uint64_t e = chi.table()->exponent();
  std::vector<ClassFunction> out{chi};
  for (std::uint64_t k = 2; k < e; ++k) {
    if (gcd_u64(k, e) != 1)
      continue;
    std::vector<Cyclotomic> v;
    for (const auto &x : chi.values())
      v.push_back(galois_apply(x, static_cast<long>(k)));
    ClassFunction img(chi.table(), std::move(v));
    if (std::find(out.begin(), out.end(), img) == out.end())
      out.push_back(std::move(img));
  }
  return out;
}

std::string validate_table(const CharacterTable &t)
{
  std::size_t k = t.class_count();
  if (t.orders.size() != k)
    return "orders line has wrong length";
  if (t.irr.size() != k)
    return "expected " + std::to_string(k) + " irreducibles, found " + std::to_string(t.irr.size());
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (t.sizes[c] == 0 || t.order % t.sizes[c])
      return "class size " + std::to_string(t.sizes[c]) + " does not divide the order";
    total += t.sizes[c];
  }
  if (total != t.order)
    return "class sizes sum to " + std::to_string(total) + ", not " + std::to_string(t.order);
  if (t.orders[0] != 1 || t.sizes[0] != 1)
    return "first class is not the identity";
  for (const auto &row : t.irr)
    if (row.size() != k)
      return "character row has wrong length";
  for (const auto &x : t.irr[0])
    if (x != Cyclotomic(1))
      return "first irreducible is not the trivial character";
  Cyclotomic ord(Rational(Integer(t.order)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic s;
      for (std::size_t c = 0; c < k; ++c)
        s += Cyclotomic(static_cast<long>(t.sizes[c])) * t.irr[i][c] * conj(t.irr[j][c]);
      if (s != (i == j ? ord : Cyclotomic(0)))
        return "row orthogonality fails for characters " + std::to_string(i + 1) + " and " +
               std::to_string(j + 1);
    }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      Cyclotomic s;
      for (std::size_t i = 0; i < k; ++i)
        s += t.irr[i][a] * conj(t.irr[i][b]);
      Cyclotomic want = a == b ? Cyclotomic(static_cast<long>(t.order / t.sizes[a])) : Cyclotomic(0);
      if (s != want)
        return "column orthogonality fails for classes " + std::to_string(a + 1) + " and " +
               std::to_string(b + 1);
    }
  return {};
}

namespace {

struct Matcher {
  const CharacterTable &a, &b;
  std::vector<std::vector<std::size_t>> cand;
  std::vector<std::size_t> col; // a column -> b column
  std::vector<bool> used;

  bool rows_compatible(std::size_t upto) const
  {
    std::multiset<std::vector<Cyclotomic>> ra, rb;
    for (std::size_t i = 0; i < a.irr.size(); ++i) {
      std::vector<Cyclotomic> x, y;
      for (std::size_t c = 0; c <= upto; ++c) {
        x.push_back(a.irr[i][c]);
        y.push_back(b.irr[i][col[c]]);
      }
      ra.insert(std::move(x));
      rb.insert(std::move(y));
    }
    return ra == rb;
  }

  bool run(std::size_t c)
  {
    if (c == col.size())
      return true;
    for (auto d : cand[c]) {
      if (used[d])
        continue;
      used[d] = true;
      col[c] = d;
      if (rows_compatible(c) && run(c + 1))
        return true;
      used[d] = false;
    }
    return false;
  }
};

} // namespace

bool tables_equivalent(const CharacterTable &a, const CharacterTable &b, bool with_orders)
{
  if (a.order != b.order || a.class_count() != b.class_count() ||
      a.irr.size() != b.irr.size())
    return false;
  std::size_t k = a.class_count();
  auto signature = [with_orders](const CharacterTable &t, std::size_t c) {
    std::vector<Cyclotomic> v;
    for (const auto &row : t.irr)
      v.push_back(row[c]);
    std::sort(v.begin(), v.end());
    return std::tuple(t.sizes[c], with_orders ? t.orders[c] : 0, v);
  };
  Matcher m{a, b, std::vector<std::vector<std::size_t>>(k), std::vector<std::size_t>(k),
            std::vector<bool>(k, false)};
  for (std::size_t c = 0; c < k; ++c) {
    auto sa = signature(a, c);
    for (std::size_t d = 0; d < k; ++d)
      if (signature(b, d) == sa)
        m.cand[c].push_back(d);
    if (m.cand[c].empty())
      return false;
  }
  return m.run(0);
}

void attach_group(CharacterTable &t, const PermGroup &g)
{
  if (g.order() != t.order)
    throw InvalidArgument("group order " + std::to_string(g.order()) + " does not match table " +
                          t.name + " of order " + std::to_string(t.order));
  t.group = g;
  t.locator = power_map_locator(g, t.orders, t.power_maps);
  t.class_reps.assign(t.class_count(), Permutation());
  std::size_t found = 0;
  g.for_each_element([&](const Permutation &x) {
    std::size_t c = t.locator->locate({x}).front();
    if (t.class_reps[c].degree() != 0)
      return true;
    // Galois mates of c are powers of x.
    std::uint64_t o = t.orders[c];
    for (std::uint64_t k = 1; k < std::max<std::uint64_t>(o, 2); ++k) {
      if (gcd_u64(k, o) != 1)
        continue;
      std::size_t d = t.power_class(c, static_cast<long>(k));
      if (t.class_reps[d].degree() == 0) {
        t.class_reps[d] = x.pow(static_cast<long>(k));
        ++found;
      }
    }
    return found < t.class_count();
  });
  if (found < t.class_count())
    throw DataError("some classes of table " + t.name + " have no elements in the group");
  t.locator = power_map_locator(g, t.orders, t.power_maps, t.class_reps);
}

} // namespace alpharep
