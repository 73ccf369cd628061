#include "alpharep/two_transitive.hpp"

#include <fstream>
#include <sstream>

#include "alpharep/errors.hpp"
#include "alpharep/finite_group.hpp"
#include "alpharep/group_io.hpp"
#include "alpharep/rational.hpp"
#include "alpharep/subgroups.hpp"

namespace alpharep {

namespace {

// <pi, pi> for the action on cosets of the subgroup with element set h.
Rational coset_rank(const FiniteGroup &fg, const ElementSet &h, std::uint64_t h_order)
{
  std::vector<std::uint64_t> hc(fg.class_count(), 0);
  for (auto i = h.find_first(); i != ElementSet::npos; i = h.find_next(i))
    ++hc[fg.class_of(static_cast<FiniteGroup::Index>(i))];
  Rational index(Integer(fg.order() / h_order));
  Rational s = 0;
  for (std::size_t c = 0; c < fg.class_count(); ++c) {
    if (!hc[c])
      continue;
    Rational pi = index * Rational(Integer(hc[c])) / Rational(Integer(fg.class_size(c)));
    s += Rational(Integer(fg.class_size(c))) * pi * pi;
  }
  return s / Rational(Integer(fg.order()));
}

std::uint64_t core_order(const SubgroupClass &c)
{
  ElementSet core = c.conjugates.front();
  for (const auto &x : c.conjugates)
    core &= x;
  return core.count();
}

std::string trim(const std::string &s)
{
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep)
{
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    out.push_back(trim(cur));
  return out;
}

} // namespace

AugmentationCriterion augmentation_alpha_criterion(const PermGroup &g, const PermGroup &h)
{
  if (h.order() == g.order())
    throw InvalidArgument("augmentation criterion needs a proper subgroup");
  GroupAction act = coset_action(g, h);
  AugmentationCriterion r;
  r.degree = act.degree;
  auto [q, k] = prime_power(r.degree);
  r.q = q;
  r.k = k;
  r.alpha = alpha(g, *action_augmentation(act)).alpha;
  if (q) {
    r.prediction = std::to_string(q) + " | alpha";
    r.consistent = r.alpha % q == 0;
  } else {
    r.prediction = "alpha = 1";
    r.consistent = r.alpha == 1;
  }
  return r;
}

std::vector<TwoTransRecord> scan_2transitive(const TablePtr &t)
{
  if (!t->group)
    throw InvalidArgument("scan needs a table with a group");
  const PermGroup &g = *t->group;
  const FiniteGroup &fg = g.enumerated();
  const SubgroupLattice &lat = fg.lattice();
  auto cols = t->locator->locate(fg.elements());
  std::vector<TwoTransRecord> out;
  for (std::size_t k = 0; k + 1 < lat.size(); ++k) {
    const auto &c = lat.classes()[k];
    if (coset_rank(fg, c.rep, c.order) != 2)
      continue;
    TwoTransRecord r;
    r.group = g.name();
    r.stabilizer_class = k;
    r.stabilizer_order = c.order;
    r.stabilizer_name = structure_name(lat.subgroup(k));
    r.degree = c.index;
    auto [q, e] = prime_power(r.degree);
    r.q = q;
    r.k = e;
    r.kernel_order = core_order(c);
    r.faithful = r.kernel_order == 1;
    std::vector<std::uint64_t> hc(t->class_count(), 0);
    for (auto x : members(c.rep))
      ++hc[cols[x]];
    std::vector<Cyclotomic> v;
    for (std::size_t col = 0; col < t->class_count(); ++col)
      v.emplace_back(Rational(Integer(c.index * hc[col]), Integer(t->sizes[col])) - 1);
    ClassFunction aug = t->make(std::move(v));
    r.augmentation_index = find_irreducible(aug);
    r.alpha = alpha(aug).alpha;
    out.push_back(std::move(r));
  }
  return out;
}

bool is_2transitive(const PermGroup &image)
{
  std::size_t n = image.degree();
  if (n < 2)
    return false;
  std::vector<bool> seen(n * n, false);
  std::vector<std::size_t> queue{1}; // pair (0, 1)
  seen[1] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto a = static_cast<Permutation::Point>(queue[i] / n);
    auto b = static_cast<Permutation::Point>(queue[i] % n);
    for (const auto &s : image.generators()) {
      std::size_t c = s(a) * n + s(b);
      if (!seen[c]) {
        seen[c] = true;
        queue.push_back(c);
      }
    }
  }
  return queue.size() == n * (n - 1);
}

SocleReport affine_socle_check(const GroupAction &action)
{
  if (!action.faithful() || !action.transitive())
    throw InvalidArgument("socle check needs a faithful transitive action");
  SocleReport r;
  const PermGroup &img = action.image;
  r.degree = action.degree;
  r.two_transitive = is_2transitive(img);
  PermGroup soc = socle(img);
  r.socle_order = soc.order();
  auto [q, k] = prime_power(r.socle_order);
  if (soc.is_abelian() && q) {
    bool exp_p = true;
    for (const auto &x : soc.generators())
      if (x.order() != q)
        exp_p = false;
    r.socle_elementary_abelian = exp_p;
  }
  r.socle_regular = soc.order() == r.degree && soc.is_transitive();
  auto mins = minimal_normal_subgroups(img);
  r.socle_nonabelian_simple = mins.size() == 1 && !soc.is_abelian();
  if (r.socle_elementary_abelian && r.socle_regular)
    r.branch = "affine";
  else if (r.socle_nonabelian_simple)
    r.branch = "almost simple";
  else
    r.branch = "other";
  r.q = prime_power(r.degree).first;
  r.alpha = alpha(img, *natural_augmentation()).alpha;
  bool criterion = r.q ? r.alpha % r.q == 0 : r.alpha == 1;
  bool affine_ok = r.branch != "affine" || (r.q && r.degree == r.socle_order && r.alpha > 1);
  r.ok = criterion && affine_ok;
  return r;
}

ExcerptReport verify_classification_excerpt(const std::string &path, const std::string &group_dir)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open excerpt file " + path);
  ExcerptReport rep;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos)
      line.erase(h);
    if (trim(line).empty())
      continue;
    auto cols = split(line, '|');
    if (cols.size() != 5)
      throw ParseError(path + ": expected 5 columns in '" + trim(line) + "'");
    ExcerptRow row{cols[0], cols[1], cols[2], cols[3], cols[4] == "data-only", {}, true};
    if (!row.data_only) {
      for (const auto &spec : split(cols[4], ',')) {
        auto parts = split(spec, ':');
        if (parts.size() < 2 || parts.size() > 3)
          throw ParseError(path + ": bad check '" + spec + "'");
        ExcerptCheck chk;
        chk.groups = parts[0];
        chk.degree = std::stoull(parts[1]);
        if (parts.size() == 3)
          chk.expected_count = std::stoull(parts[2]);
        chk.prime_power = prime_power(chk.degree).first != 0;
        bool alpha_ok = true;
        std::uint64_t count = 0;
        for (const auto &file : split(chk.groups, '+')) {
          PermGroup g = load_group(group_dir + "/" + file);
          if (chk.expected_count) {
            const FiniteGroup &fg = g.enumerated();
            const SubgroupLattice &lat = fg.lattice();
            for (std::size_t k = 0; k < lat.size(); ++k) {
              const auto &c = lat.classes()[k];
              if (c.index != chk.degree || coset_rank(fg, c.rep, c.order) != 2)
                continue;
              ++count;
              auto a = alpha(g, *action_augmentation(coset_action(g, lat.subgroup(k)))).alpha;
              chk.alphas.push_back(a);
            }
          } else {
            if (g.degree() != chk.degree || !is_2transitive(g))
              throw DataError(file + " does not act 2-transitively on " + parts[1] + " points");
            chk.alphas.push_back(alpha(g, *natural_augmentation()).alpha);
            chk.note = "action count not recomputed (lattice bound)";
          }
        }
        for (auto a : chk.alphas)
          if ((a > 1) != chk.prime_power)
            alpha_ok = false;
        if (chk.expected_count)
          chk.count = count;
        chk.ok = alpha_ok && !chk.alphas.empty() &&
                 (!chk.expected_count || *chk.expected_count == count);
        row.ok = row.ok && chk.ok;
        row.checks.push_back(std::move(chk));
      }
    }
    rep.ok = rep.ok && row.ok;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

} // namespace alpharep
