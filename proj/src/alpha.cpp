#include "alpharep/alpha.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "alpharep/errors.hpp"
#include "alpharep/finite_group.hpp"
#include "alpharep/rational.hpp"
#include "alpharep/subgroups.hpp"

namespace alpharep {

// Evaluators

namespace {

class TableEval : public CharacterEvaluator {
public:
  TableEval(ClassFunction chi, std::string label) : chi_(std::move(chi)), label_(std::move(label))
  {
    if (!chi_.table() || !chi_.table()->locator)
      throw InvalidArgument("character table has no group realization");
  }
  std::vector<Cyclotomic> values(const std::vector<Permutation> &elems) const override
  {
    auto cls = chi_.table()->locator->locate(elems);
    std::vector<Cyclotomic> out;
    out.reserve(cls.size());
    for (auto c : cls)
      out.push_back(chi_[c]);
    return out;
  }
  std::string label() const override { return label_; }

private:
  ClassFunction chi_;
  std::string label_;
};

class FunctionEval : public CharacterEvaluator {
public:
  FunctionEval(std::function<Cyclotomic(const Permutation &)> f, std::string label)
      : f_(std::move(f)), label_(std::move(label))
  {
  }
  std::vector<Cyclotomic> values(const std::vector<Permutation> &elems) const override
  {
    std::vector<Cyclotomic> out;
    out.reserve(elems.size());
    for (const auto &x : elems)
      out.push_back(f_(x));
    return out;
  }
  std::string label() const override { return label_; }

private:
  std::function<Cyclotomic(const Permutation &)> f_;
  std::string label_;
};

class TensorEval : public CharacterEvaluator {
public:
  TensorEval(EvaluatorPtr a, std::size_t da, EvaluatorPtr b, std::size_t db)
      : a_(std::move(a)), b_(std::move(b)), da_(da), db_(db)
  {
  }
  std::vector<Cyclotomic> values(const std::vector<Permutation> &elems) const override
  {
    std::vector<Permutation> xa, xb;
    for (const auto &x : elems) {
      if (x.degree() != da_ + db_)
        throw InvalidArgument("element is not in the direct product");
      std::vector<Permutation::Point> ia(da_), ib(db_);
      for (std::size_t i = 0; i < da_; ++i)
        ia[i] = x(static_cast<Permutation::Point>(i));
      for (std::size_t i = 0; i < db_; ++i)
        ib[i] = static_cast<Permutation::Point>(x(static_cast<Permutation::Point>(da_ + i)) - da_);
      xa.emplace_back(std::move(ia));
      xb.emplace_back(std::move(ib));
    }
    auto va = a_->values(xa);
    auto vb = b_->values(xb);
    for (std::size_t i = 0; i < va.size(); ++i)
      va[i] *= vb[i];
    return va;
  }
  std::string label() const override { return a_->label() + "#" + b_->label(); }

private:
  EvaluatorPtr a_, b_;
  std::size_t da_, db_;
};

class SumEval : public CharacterEvaluator {
public:
  explicit SumEval(std::vector<EvaluatorPtr> parts) : parts_(std::move(parts)) {}
  std::vector<Cyclotomic> values(const std::vector<Permutation> &elems) const override
  {
    std::vector<Cyclotomic> out(elems.size());
    for (const auto &p : parts_) {
      auto v = p->values(elems);
      for (std::size_t i = 0; i < v.size(); ++i)
        out[i] += v[i];
    }
    return out;
  }
  std::string label() const override
  {
    std::string s;
    for (const auto &p : parts_)
      s += (s.empty() ? "" : "+") + p->label();
    return s;
  }

private:
  std::vector<EvaluatorPtr> parts_;
};

std::int64_t average(const std::vector<Cyclotomic> &vals, std::uint64_t n)
{
  Cyclotomic s;
  for (const auto &v : vals)
    s += v;
  s /= Cyclotomic(Rational(Integer(n)));
  std::int64_t d;
  try {
    d = to_rational_integer(s);
  } catch (const DataError &) {
    throw DataError("fixed-space dimension " + s.str() + " is not an integer");
  }
  if (d < 0)
    throw DataError("negative fixed-space dimension " + std::to_string(d));
  return d;
}

} // namespace

EvaluatorPtr table_character(const ClassFunction &chi, std::string label)
{
  return std::make_shared<TableEval>(chi, std::move(label));
}

EvaluatorPtr function_character(std::function<Cyclotomic(const Permutation &)> f,
                                std::string label)
{
  return std::make_shared<FunctionEval>(std::move(f), std::move(label));
}

EvaluatorPtr natural_augmentation(bool sign_twisted)
{
  return function_character(
      [sign_twisted](const Permutation &x) {
        long v = static_cast<long>(x.fixed_points()) - 1;
        return Cyclotomic(sign_twisted ? v * x.sign() : v);
      },
      sign_twisted ? "V-" : "V");
}

EvaluatorPtr action_augmentation(const GroupAction &action, std::string label)
{
  auto act = action.act;
  return function_character(
      [act](const Permutation &x) {
        return Cyclotomic(static_cast<long>(act(x).fixed_points()) - 1);
      },
      label.empty() ? "aug" : std::move(label));
}

EvaluatorPtr outer_tensor(EvaluatorPtr a, std::size_t degree_a, EvaluatorPtr b,
                          std::size_t degree_b)
{
  return std::make_shared<TensorEval>(std::move(a), degree_a, std::move(b), degree_b);
}

EvaluatorPtr sum_character(std::vector<EvaluatorPtr> parts)
{
  return std::make_shared<SumEval>(std::move(parts));
}

std::int64_t fixed_space_dim(const CharacterEvaluator &chi, const std::vector<Permutation> &q)
{
  return average(chi.values(q), q.size());
}

std::int64_t fixed_space_dim(const CharacterEvaluator &chi, const PermGroup &q)
{
  return fixed_space_dim(chi, q.elements());
}

// Sylow-local descent

namespace {

// A p-group with its multiplication table; subgroups are element sets.
struct PGroup {
  std::uint64_t p;
  std::vector<Permutation> el;
  std::vector<std::uint32_t> tab;
  std::uint32_t id = 0;

  PGroup(const PermGroup &g, std::uint64_t p_) : p(p_)
  {
    el = g.elements();
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> idx;
    for (std::uint32_t i = 0; i < el.size(); ++i)
      idx.emplace(el[i], i);
    std::size_t n = el.size();
    tab.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        tab[a * n + b] = idx.at(el[a] * el[b]);
    id = idx.at(Permutation(g.degree()));
  }

  std::size_t size() const { return el.size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return tab[a * el.size() + b]; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const
  {
    std::uint32_t r = id;
    for (std::uint64_t i = 0; i < k; ++i)
      r = mul(r, a);
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const
  {
    std::uint32_t x = a;
    while (mul(x, a) != id)
      x = mul(x, a);
    return x;
  }

  ElementSet closure(const std::vector<std::uint32_t> &gens) const
  {
    ElementSet s(el.size());
    std::vector<std::uint32_t> list{id};
    s.set(id);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (auto g : gens) {
        auto y = mul(list[i], g);
        if (!s.test(y)) {
          s.set(y);
          list.push_back(y);
        }
      }
    return s;
  }

  std::vector<std::uint32_t> greedy_gens(const std::vector<std::uint32_t> &m) const
  {
    std::vector<std::uint32_t> gens;
    ElementSet h(el.size());
    h.set(id);
    std::size_t target = m.size();
    for (auto x : m) {
      if (h.count() == target)
        break;
      if (h.test(x))
        continue;
      gens.push_back(x);
      h = closure(gens);
    }
    return gens;
  }

  std::vector<ElementSet> maximal_subgroups(const ElementSet &q) const
  {
    auto m = to_list(q);
    if (m.size() == 1)
      return {};
    auto gens = greedy_gens(m);
    // Frattini subgroup Q^p [Q,Q]
    ElementSet fs(el.size());
    for (auto x : m)
      fs.set(pow(x, p));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        auto a = gens[i], b = gens[j];
        auto c = mul(mul(inv(a), inv(b)), mul(a, b));
        for (auto y : m)
          fs.set(mul(mul(y, c), inv(y)));
      }
    ElementSet phi = closure(to_list(fs));
    auto phi_list = to_list(phi);
    auto phi_gens = greedy_gens(phi_list);

    std::vector<std::uint32_t> cs;
    ElementSet h = phi;
    for (auto x : m) {
      if (h.count() == m.size())
        break;
      if (h.test(x))
        continue;
      cs.push_back(x);
      auto g2 = phi_gens;
      g2.insert(g2.end(), cs.begin(), cs.end());
      h = closure(g2);
    }
    std::size_t d = cs.size();
    // coordinates in Q / Phi as base-p digits
    std::vector<std::uint64_t> coord(el.size(), 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i)
      total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint32_t x = id;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        x = mul(x, pow(cs[i], c % p));
        c /= p;
      }
      for (auto f : phi_list)
        coord[mul(x, f)] = code;
    }
    auto digit = [&](std::uint64_t code, std::size_t i) {
      for (std::size_t k = 0; k < i; ++k)
        code /= p;
      return code % p;
    };
    std::vector<ElementSet> out;
    for (std::uint64_t fcode = 1; fcode < total; ++fcode) {
      // normalised: first nonzero digit is 1
      std::size_t first = 0;
      while (digit(fcode, first) == 0)
        ++first;
      if (digit(fcode, first) != 1)
        continue;
      ElementSet s(el.size());
      for (auto x : m) {
        std::uint64_t dot = 0;
        for (std::size_t i = 0; i < d; ++i)
          dot += digit(fcode, i) * digit(coord[x], i);
        if (dot % p == 0)
          s.set(x);
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  std::vector<std::uint32_t> to_list(const ElementSet &s) const
  {
    std::vector<std::uint32_t> v;
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
      v.push_back(static_cast<std::uint32_t>(i));
    return v;
  }

  PermGroup to_group(const ElementSet &s) const
  {
    std::vector<Permutation> gens;
    for (auto i : greedy_gens(to_list(s)))
      gens.push_back(el[i]);
    return PermGroup(gens, el[id].degree());
  }
};

} // namespace

LocalAlpha alpha_p(const PermGroup &g, const CharacterEvaluator &chi, std::uint64_t p)
{
  LocalAlpha out;
  out.p = p;
  out.sylow = sylow_subgroup(g, p);
  PGroup pg(out.sylow, p);
  auto vals = chi.values(pg.el);
  auto dim = [&](const ElementSet &s) {
    Cyclotomic sum;
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
      sum += vals[i];
    sum /= Cyclotomic(static_cast<long>(s.count()));
    std::int64_t d = to_rational_integer(sum);
    if (d < 0)
      throw DataError("negative fixed-space dimension");
    return d;
  };
  if (vals[pg.id] == Cyclotomic(0))
    throw InvalidArgument("zero character has no alpha-characteristic");
  ElementSet all(pg.size());
  all.set();
  std::vector<ElementSet> level{all};
  for (;;) {
    for (const auto &q : level) {
      ++out.subgroups_examined;
      if (dim(q) > 0) {
        out.value = pg.size() / q.count();
        out.witness = pg.to_group(q);
        return out;
      }
    }
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> next;
    for (const auto &q : level)
      for (auto &m : pg.maximal_subgroups(q))
        if (seen.insert(m).second)
          next.push_back(std::move(m));
    if (next.empty())
      throw DataError("descent reached the trivial subgroup without a fixed vector");
    level = std::move(next);
  }
}

AlphaReport alpha(const PermGroup &g, const CharacterEvaluator &chi)
{
  AlphaReport r;
  r.label = chi.label();
  r.degree = to_rational_integer(chi.values({Permutation(g.degree())}).front());
  for (auto p : prime_divisors(g.order())) {
    r.local.push_back(alpha_p(g, chi, p));
    r.alpha *= r.local.back().value;
  }
  return r;
}

namespace {

const PermGroup &table_group(const ClassFunction &chi)
{
  if (!chi.table() || !chi.table()->group)
    throw InvalidArgument("character table has no group realization");
  return *chi.table()->group;
}

} // namespace

AlphaReport alpha(const ClassFunction &chi, std::string label)
{
  return alpha(table_group(chi), *table_character(chi, std::move(label)));
}

DirectSumAlpha direct_sum_alpha(const std::vector<ClassFunction> &chis)
{
  if (chis.empty())
    throw InvalidArgument("direct_sum_alpha needs at least one character");
  DirectSumAlpha r;
  ClassFunction total = chis.front();
  for (std::size_t i = 0; i < chis.size(); ++i) {
    r.parts.push_back(alpha(chis[i]).alpha);
    r.gcd = std::gcd(r.gcd, r.parts.back());
    if (i)
      total += chis[i];
  }
  r.direct = alpha(total).alpha;
  r.agree = r.direct == r.gcd;
  return r;
}

// Orbit types

std::string structure_name(const PermGroup &h)
{
  std::uint64_t n = h.order();
  if (n == 1)
    return "Z1";
  auto el = h.elements();
  std::map<std::uint64_t, std::uint64_t> count; // element order -> count
  for (const auto &x : el)
    ++count[x.order()];
  std::uint64_t maxo = count.rbegin()->first;
  if (maxo == n)
    return "Z" + std::to_string(n);
  if (h.is_abelian()) {
    // invariants from the number of solutions of x^(p^i) = 1
    std::string s;
    for (auto p : prime_divisors(n)) {
      std::vector<unsigned> lam;
      std::uint64_t pk = 1;
      std::uint64_t prev = 1;
      std::vector<unsigned> ranks; // rank of the p^i torsion layers
      for (;;) {
        pk *= p;
        std::uint64_t c = 0;
        for (const auto &[o, k] : count)
          if (pk % o == 0)
            c += k;
        if (c == prev)
          break;
        unsigned r = 0;
        for (std::uint64_t t = c / prev; t > 1; t /= p)
          ++r;
        ranks.push_back(r);
        prev = c;
      }
      // ranks[i] = number of cyclic factors of order >= p^(i+1)
      for (std::size_t i = 0; i < ranks.size(); ++i) {
        unsigned here = ranks[i] - (i + 1 < ranks.size() ? ranks[i + 1] : 0);
        std::uint64_t q = 1;
        for (std::size_t k = 0; k <= i; ++k)
          q *= p;
        for (unsigned k = 0; k < here; ++k)
          s += (s.empty() ? "Z" : "xZ") + std::to_string(q);
      }
    }
    if (s == "Z2xZ2")
      return "V4";
    return s;
  }
  std::uint64_t involutions = count.count(2) ? count[2] : 0;
  if (n % 2 == 0 && count.count(n / 2)) {
    // cyclic subgroup of index 2; dihedral when every other element is an involution
    std::uint64_t m = n / 2;
    if (involutions == m + (m % 2 == 0 ? 1 : 0))
      return n == 8 ? "D8" : "D" + std::to_string(n / 2);
    if (n == 8 && involutions == 1)
      return "Q8";
  }
  PermGroup d = derived_subgroup(h);
  if (n == 12 && !count.count(6))
    return "A4";
  if (n == 24 && d.order() == 12 && !count.count(6))
    return "S4";
  if (n == 24 && involutions == 1)
    return "SL(2,3)";
  if (n == 20 && count.count(4) && !count.count(10))
    return "F20";
  if (n == 60 && d.order() == 60)
    return "A5";
  if (n == 120 && d.order() == 60 && count.count(6))
    return "S5";
  return "G" + std::to_string(n);
}

OrbitTypeLattice orbit_types(const PermGroup &g, const CharacterEvaluator &chi)
{
  const FiniteGroup &fg = g.enumerated();
  const SubgroupLattice &lat = fg.lattice();
  auto vals = chi.values(fg.elements());
  std::vector<std::int64_t> dims(lat.size());
  for (std::size_t k = 0; k < lat.size(); ++k) {
    std::vector<Cyclotomic> v;
    for (auto x : members(lat.classes()[k].rep))
      v.push_back(vals[x]);
    dims[k] = average(v, v.size());
  }
  std::vector<std::size_t> node_classes;
  for (std::size_t k = 0; k < lat.size(); ++k) {
    if (dims[k] < 1)
      continue;
    bool drop = true;
    for (auto o : lat.classes()[k].min_over_class)
      if (dims[o] >= dims[k])
        drop = false;
    if (drop)
      node_classes.push_back(k);
  }
  OrbitTypeLattice out;
  std::size_t top = lat.size() - 1;
  for (auto k : node_classes)
    out.gcd_index = std::gcd(out.gcd_index, lat.classes()[k].index);
  if (node_classes.empty() || node_classes.back() != top)
    node_classes.push_back(top);
  std::reverse(node_classes.begin(), node_classes.end());
  for (auto k : node_classes) {
    const auto &c = lat.classes()[k];
    OrbitTypeNode nd;
    nd.class_id = k;
    nd.order = c.order;
    nd.index = c.index;
    nd.dim = dims[k];
    nd.name = structure_name(lat.subgroup(k));
    nd.genuine = dims[k] >= 1;
    out.nodes.push_back(std::move(nd));
  }
  auto below = [&](std::size_t a, std::size_t b) { // node a strictly below node b
    const auto &na = out.nodes[a], &nb = out.nodes[b];
    return na.order < nb.order && lat.contained_up_to_conjugacy(na.class_id, nb.class_id);
  };
  for (std::size_t b = 0; b < out.nodes.size(); ++b)
    for (std::size_t a = 0; a < out.nodes.size(); ++a) {
      if (!below(a, b))
        continue;
      bool cover = true;
      for (std::size_t c = 0; c < out.nodes.size() && cover; ++c)
        if (c != a && c != b && below(a, c) && below(c, b))
          cover = false;
      if (cover)
        out.edges.emplace_back(b, a);
    }
  return out;
}

OrbitTypeLattice orbit_types(const ClassFunction &chi)
{
  return orbit_types(table_group(chi), *table_character(chi));
}

std::string to_dot(const OrbitTypeLattice &l, const std::string &title)
{
  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < l.nodes.size(); ++i) {
    const auto &n = l.nodes[i];
    os << "  n" << i << " [label=\"(" << n.name << ")\\nindex " << n.index << ", dim " << n.dim
       << "\"" << (n.genuine ? "" : ", style=dashed") << "];\n";
  }
  for (auto [u, d] : l.edges)
    os << "  n" << d << " -> n" << u << ";\n";
  os << "}\n";
  return os.str();
}

Realizability is_realizable(const PermGroup &g, const CharacterEvaluator &chi)
{
  Realizability r;
  r.alpha = alpha(g, chi).alpha;
  if (g.order() > bounds().lattice)
    return r;
  auto l = orbit_types(g, chi);
  r.realizable = false;
  for (const auto &n : l.nodes)
    if (n.genuine && n.index == r.alpha) {
      r.realizable = true;
      r.witness = n;
      break;
    }
  return r;
}

Realizability is_realizable(const ClassFunction &chi)
{
  return is_realizable(table_group(chi), *table_character(chi));
}

// Group-level checks

SolvabilityReport solvability_crosscheck(const TablePtr &t)
{
  SolvabilityReport r;
  const PermGroup &g = *t->group;
  r.derived_series_solvable = is_solvable(g);
  r.all_nontrivial_alpha_gt_1 = true;
  for (std::size_t i = 0; i < t->irreducible_count(); ++i) {
    r.alphas.push_back(alpha(t->irreducible(i)).alpha);
    if (i > 0 && r.alphas.back() == 1)
      r.all_nontrivial_alpha_gt_1 = false;
  }
  r.agree = r.derived_series_solvable == r.all_nontrivial_alpha_gt_1;
  return r;
}

bool totally_trivial_scan(const TablePtr &t)
{
  for (std::size_t i = 0; i < t->irreducible_count(); ++i)
    if (alpha(t->irreducible(i)).alpha != 1)
      return false;
  return true;
}

InductionReport induction_alpha_checks(const ClassFunction &omega, const TablePtr &g_table)
{
  const PermGroup &n = table_group(omega);
  const PermGroup &g = *g_table->group;
  if (!n.is_normal_in(g))
    throw InvalidArgument("subgroup is not normal");
  InductionReport r;
  r.alpha_omega = alpha(omega).alpha;
  ClassFunction ind = induce(omega, g_table);
  r.alpha_induced = alpha(ind).alpha;
  r.divides = r.alpha_induced % r.alpha_omega == 0;
  r.trivial_transfer = r.alpha_omega != 1 || r.alpha_induced == 1;
  auto series = derived_series(g);
  r.quotient_solvable = series.back().is_subgroup_of(n);
  auto mult = decompose(ind);
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (!mult[i])
      continue;
    Constituent c{i, mult[i], alpha(g_table->irreducible(i)).alpha};
    if (c.alpha == 1)
      r.constituent_with_alpha_1 = true;
    r.constituents.push_back(c);
  }
  r.ok = r.divides && r.trivial_transfer &&
         (!(r.quotient_solvable && r.alpha_omega == 1) || r.constituent_with_alpha_1);
  return r;
}

TensorReport tensor_alpha_checks(const ClassFunction &rho, const ClassFunction &psi)
{
  const PermGroup &a = table_group(rho), &b = table_group(psi);
  TensorReport r;
  r.alpha_a = alpha(rho).alpha;
  r.alpha_b = alpha(psi).alpha;
  PermGroup ab = direct_product(a, b);
  auto ev = outer_tensor(table_character(rho), a.degree(), table_character(psi), b.degree());
  r.alpha_tensor = alpha(ab, *ev).alpha;
  r.lcm_divides = r.alpha_tensor % std::lcm(r.alpha_a, r.alpha_b) == 0;
  r.divides_product = (r.alpha_a * r.alpha_b) % r.alpha_tensor == 0;
  r.coprime_orders = std::gcd(a.order(), b.order()) == 1;
  r.equal_when_coprime = !r.coprime_orders || r.alpha_tensor == r.alpha_a * r.alpha_b;
  r.ok = r.lcm_divides && r.divides_product && r.equal_when_coprime;
  return r;
}

} // namespace alpharep
