#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "alpharep/acceptance.hpp"
#include "alpharep/alpha.hpp"
#include "alpharep/congruence.hpp"
#include "alpharep/corpus.hpp"
#include "alpharep/dixon.hpp"
#include "alpharep/errors.hpp"
#include "alpharep/finite_group.hpp"
#include "alpharep/groebner.hpp"
#include "alpharep/group_io.hpp"
#include "alpharep/matrix_rep.hpp"
#include "alpharep/norton.hpp"
#include "alpharep/quadratic_map.hpp"
#include "alpharep/subgroups.hpp"
#include "alpharep/table_io.hpp"
#include "alpharep/two_transitive.hpp"

using namespace alpharep;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBound = 3 };

struct Global {
  std::string data_dir = default_data_dir();
  bool json_out = false;
  std::uint64_t bound = 0;
};

// A path as given, else the bundled file of that name.
std::string resolve(const Global &g, const std::string &file, const std::string &sub)
{
  if (std::filesystem::exists(file))
    return file;
  std::string bundled = g.data_dir + "/" + sub + "/" + file;
  if (std::filesystem::exists(bundled))
    return bundled;
  throw InvalidArgument("no such file: " + file);
}

std::string read_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PermGroup open_group(const Global &g, const std::string &file)
{
  return load_group(resolve(g, file, "groups"));
}

// Computed from generators, or read from --table with columns located in the group.
TablePtr open_table(const Global &g, const PermGroup &grp, const std::string &table_file)
{
  if (!table_file.empty())
    return load_table(resolve(g, table_file, "tables"), grp);
  return compute_table_dixon(grp);
}

ClassFunction pick_char(const TablePtr &t, std::size_t j)
{
  if (j < 1 || j > t->irreducible_count())
    throw InvalidArgument("--char must be between 1 and " +
                          std::to_string(t->irreducible_count()));
  return t->irreducible(j - 1);
}

std::string cell(const Cyclotomic &x) { return x.is_zero() ? "." : x.str(); }

std::string pad(const std::string &s, std::size_t w)
{
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

json alpha_json(const AlphaReport &r, std::size_t index)
{
  json j;
  j["index"] = index;
  j["degree"] = r.degree;
  j["alpha"] = r.alpha;
  json local = json::array();
  for (const auto &l : r.local)
    local.push_back({{"p", l.p},
                     {"value", l.value},
                     {"sylow_order", l.sylow.order()},
                     {"witness_order", l.witness.order()}});
  j["local"] = local;
  return j;
}

json lattice_json(const OrbitTypeLattice &l)
{
  json nodes = json::array(), edges = json::array();
  for (const auto &n : l.nodes)
    nodes.push_back({{"name", n.name},
                     {"order", n.order},
                     {"index", n.index},
                     {"fixed_dim", n.dim},
                     {"genuine", n.genuine}});
  for (auto [u, d] : l.edges)
    edges.push_back({u, d});
  return {{"nodes", nodes}, {"edges", edges}, {"gcd_index", l.gcd_index}};
}

void print_json(const json &j) { std::cout << j.dump(2) << "\n"; }

// group info

int cmd_group_info(const Global &g, const std::string &file)
{
  PermGroup grp = open_group(g, file);
  const auto &fg = grp.enumerated();
  bool solv = is_solvable(grp);
  if (g.json_out) {
    print_json({{"name", grp.name()},
                {"degree", grp.degree()},
                {"order", grp.order()},
                {"solvable", solv},
                {"classes", fg.class_count()},
                {"transitive", grp.is_transitive()}});
    return kPass;
  }
  std::cout << "name        " << grp.name() << "\n"
            << "degree      " << grp.degree() << "\n"
            << "order       " << grp.order() << "\n"
            << "solvable    " << (solv ? "yes" : "no") << "\n"
            << "classes     " << fg.class_count() << "\n"
            << "transitive  " << (grp.is_transitive() ? "yes" : "no") << "\n";
  return kPass;
}

// chartab

void show_table(const CharacterTable &t, const std::vector<std::uint64_t> *alphas)
{
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"", alphas ? "alpha" : ""};
  for (std::size_t c = 0; c < t.class_count(); ++c)
    head.push_back(std::to_string(t.orders[c]) + static_cast<char>('a' + [&] {
                     std::size_t k = 0;
                     for (std::size_t d = 0; d < c; ++d)
                       k += t.orders[d] == t.orders[c];
                     return static_cast<int>(k);
                   }()));
  rows.push_back(head);
  std::vector<std::string> sizes{"size", ""};
  for (auto s : t.sizes)
    sizes.push_back(std::to_string(s));
  rows.push_back(sizes);
  for (std::size_t i = 0; i < t.irreducible_count(); ++i) {
    std::vector<std::string> r{"chi_" + std::to_string(i + 1),
                               alphas ? std::to_string((*alphas)[i]) : ""};
    for (const auto &x : t.irr[i])
      r.push_back(cell(x));
    rows.push_back(r);
  }
  std::vector<std::size_t> w(rows.front().size(), 0);
  for (const auto &r : rows)
    for (std::size_t k = 0; k < r.size(); ++k)
      w[k] = std::max(w[k], r[k].size());
  std::cout << t.name << ", order " << t.order << "\n";
  for (const auto &r : rows) {
    std::string line;
    for (std::size_t k = 0; k < r.size(); ++k)
      if (k != 1 || alphas)
        line += pad(r[k], w[k] + 2);
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    std::cout << line << "\n";
  }
}

int cmd_chartab(const Global &g, const std::string &mode, const std::string &file,
                const std::string &group_file, const std::string &out)
{
  TablePtr t;
  if (mode == "compute") {
    t = compute_table_dixon(open_group(g, file));
  } else {
    std::optional<PermGroup> grp;
    if (!group_file.empty())
      grp = open_group(g, group_file);
    t = load_table(resolve(g, file, "tables"), grp);
  }
  if (!out.empty()) {
    std::ofstream(out) << write_table(*t);
    return kPass;
  }
  if (mode == "compute" || (mode == "load" && !g.json_out)) {
    std::cout << write_table(*t);
    return kPass;
  }
  if (g.json_out) {
    json rows = json::array();
    for (const auto &r : t->irr) {
      json row = json::array();
      for (const auto &x : r)
        row.push_back(x.str());
      rows.push_back(row);
    }
    print_json({{"name", t->name},
                {"order", t->order},
                {"sizes", t->sizes},
                {"orders", t->orders},
                {"irreducibles", rows}});
    return kPass;
  }
  show_table(*t, nullptr);
  return kPass;
}

// alpha, orbit types, solvability

int cmd_alpha(const Global &g, const std::string &file, std::size_t j,
              const std::string &table_file)
{
  PermGroup grp = open_group(g, file);
  TablePtr t = open_table(g, grp, table_file);
  std::vector<AlphaReport> reps;
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i <= t->irreducible_count(); ++i)
    if (!j || i == j) {
      reps.push_back(alpha(pick_char(t, i)));
      idx.push_back(i);
    }
  if (j && reps.empty())
    pick_char(t, j);
  if (g.json_out) {
    json chars = json::array();
    for (std::size_t k = 0; k < reps.size(); ++k)
      chars.push_back(alpha_json(reps[k], idx[k]));
    json alphas = json::array();
    for (const auto &r : reps)
      alphas.push_back(r.alpha);
    print_json({{"group", grp.name()},
                {"order", grp.order()},
                {"alpha", alphas},
                {"characters", chars}});
    return kPass;
  }
  std::cout << grp.name() << ", order " << grp.order() << "\n";
  std::cout << "chi      degree  alpha  local\n";
  for (std::size_t k = 0; k < reps.size(); ++k) {
    std::string local;
    for (const auto &l : reps[k].local)
      local += (local.empty() ? "" : " ") + std::to_string(l.p) + ":" + std::to_string(l.value);
    std::cout << pad("chi_" + std::to_string(idx[k]), 9) << pad(std::to_string(reps[k].degree), 8)
              << pad(std::to_string(reps[k].alpha), 7) << local << "\n";
  }
  return kPass;
}

int cmd_orbit_types(const Global &g, const std::string &file, std::size_t j,
                    const std::string &table_file, bool dot)
{
  PermGroup grp = open_group(g, file);
  TablePtr t = open_table(g, grp, table_file);
  auto chi = pick_char(t, j);
  auto l = orbit_types(chi);
  std::string title = grp.name() + " chi_" + std::to_string(j);
  if (dot) {
    std::cout << to_dot(l, title);
    return kPass;
  }
  if (g.json_out) {
    json out = lattice_json(l);
    out["group"] = grp.name();
    out["char"] = j;
    print_json(out);
    return kPass;
  }
  std::cout << title << "\n";
  for (std::size_t i = 0; i < l.nodes.size(); ++i) {
    const auto &n = l.nodes[i];
    std::string below;
    for (auto [u, d] : l.edges)
      if (u == i)
        below += (below.empty() ? "" : ", ") + l.nodes[d].name;
    std::string line = pad("(" + n.name + ")" + (n.genuine ? "" : "*"), 10) + "index " +
                       pad(std::to_string(n.index), 6) + "dim " + std::to_string(n.dim);
    if (!below.empty())
      line = pad(line, 30) + "covers " + below;
    std::cout << line << "\n";
  }
  std::cout << "gcd of indices " << l.gcd_index << "\n";
  return kPass;
}

int cmd_solvable_check(const Global &g, const std::string &file, const std::string &table_file)
{
  PermGroup grp = open_group(g, file);
  TablePtr t = open_table(g, grp, table_file);
  auto r = solvability_crosscheck(t);
  std::optional<bool> kl;
  if (grp.order() <= 400)
    kl = kaplan_levy_all_choices(grp);
  bool ok = r.agree && (!kl || *kl == r.derived_series_solvable);
  if (g.json_out) {
    json j{{"group", grp.name()},
           {"derived_series_solvable", r.derived_series_solvable},
           {"all_nontrivial_alpha_gt_1", r.all_nontrivial_alpha_gt_1},
           {"alpha", r.alphas},
           {"agree", r.agree}};
    j["kaplan_levy"] = kl ? json(*kl) : json(nullptr);
    print_json(j);
  } else {
    std::cout << grp.name() << "\n"
              << "derived series      " << (r.derived_series_solvable ? "solvable" : "not solvable")
              << "\n"
              << "alpha criterion     "
              << (r.all_nontrivial_alpha_gt_1 ? "all nontrivial alpha > 1"
                                              : "some nontrivial alpha = 1")
              << "\n"
              << "Kaplan-Levy         "
              << (kl ? (*kl ? "products cover G" : "some product misses G") : "skipped (order > 400)")
              << "\n"
              << (ok ? "agree" : "DISAGREE") << "\n";
  }
  return ok ? kPass : kFail;
}

int cmd_scan_trivial(const Global &g, const std::string &file, const std::string &table_file)
{
  PermGroup grp = open_group(g, file);
  TablePtr t = open_table(g, grp, table_file);
  std::vector<std::uint64_t> alphas;
  for (std::size_t i = 0; i < t->irreducible_count(); ++i)
    alphas.push_back(alpha(t->irreducible(i)).alpha);
  bool trivial = std::all_of(alphas.begin(), alphas.end(), [](auto a) { return a == 1; });
  if (g.json_out) {
    print_json({{"group", grp.name()}, {"alpha", alphas}, {"all_alpha_1", trivial}});
  } else {
    std::cout << grp.name() << ": alpha =";
    for (auto a : alphas)
      std::cout << " " << a;
    std::cout << "\n" << (trivial ? "every irreducible has alpha 1" : "some irreducible has alpha > 1")
              << "\n";
  }
  return kPass;
}

// twotrans

int cmd_twotrans_scan(const Global &g, const std::string &file, const std::string &table_file)
{
  PermGroup grp = open_group(g, file);
  TablePtr t = open_table(g, grp, table_file);
  auto recs = scan_2transitive(t);
  if (g.json_out) {
    json rows = json::array();
    for (const auto &r : recs) {
      json row{{"stabilizer", r.stabilizer_name}, {"stabilizer_order", r.stabilizer_order},
               {"degree", r.degree},          {"prime_power", r.q != 0},
               {"faithful", r.faithful},      {"kernel_order", r.kernel_order},
               {"alpha", r.alpha}};
      row["char"] = r.augmentation_index ? json(*r.augmentation_index + 1) : json(nullptr);
      rows.push_back(row);
    }
    print_json({{"group", grp.name()}, {"actions", rows}});
    return kPass;
  }
  std::cout << grp.name() << "\n";
  std::cout << "H         |G:H|  q^k    faithful  char     alpha\n";
  for (const auto &r : recs) {
    std::string qk = r.q ? std::to_string(r.q) + "^" + std::to_string(r.k) : "-";
    std::string ch =
        r.augmentation_index ? "chi_" + std::to_string(*r.augmentation_index + 1) : "reducible";
    std::cout << pad(r.stabilizer_name, 10) << pad(std::to_string(r.degree), 7) << pad(qk, 7)
              << pad(r.faithful ? "yes" : "no", 10) << pad(ch, 9) << r.alpha << "\n";
  }
  return kPass;
}

int cmd_twotrans_verify(const Global &g, const std::string &file)
{
  auto rep = verify_classification_excerpt(resolve(g, file, "."), g.data_dir + "/groups");
  if (g.json_out) {
    json rows = json::array();
    for (const auto &r : rep.rows) {
      json checks = json::array();
      for (const auto &c : r.checks) {
        json cj{{"groups", c.groups}, {"degree", c.degree}, {"prime_power", c.prime_power},
                {"alpha", c.alphas},  {"ok", c.ok}};
        cj["count"] = c.count ? json(*c.count) : json(nullptr);
        cj["expected_count"] = c.expected_count ? json(*c.expected_count) : json(nullptr);
        checks.push_back(cj);
      }
      rows.push_back({{"degree", r.degree},
                      {"socle", r.socle},
                      {"data_only", r.data_only},
                      {"checks", checks},
                      {"ok", r.ok}});
    }
    print_json({{"rows", rows}, {"ok", rep.ok}});
  } else {
    for (const auto &r : rep.rows) {
      std::cout << (r.data_only ? "DATA" : r.ok ? "PASS" : "FAIL") << "  " << pad(r.degree, 8)
                << r.socle << "\n";
      for (const auto &c : r.checks) {
        std::cout << "      " << c.groups << " degree " << c.degree << ": alpha";
        for (auto a : c.alphas)
          std::cout << " " << a;
        if (c.count)
          std::cout << ", " << *c.count << " actions";
        if (!c.note.empty())
          std::cout << " (" << c.note << ")";
        std::cout << "\n";
      }
    }
  }
  return rep.ok ? kPass : kFail;
}

// groebner, norton, quadmap, congruence

int cmd_groebner(const Global &g, const std::string &file)
{
  auto sys = parse_polynomial_system(read_file(file));
  if (sys.empty())
    throw InvalidArgument(file + " has no polynomials");
  auto b = buchberger(sys);
  bool unit = b.polys.size() == 1 && b.polys.front().is_constant() && !b.polys.front().is_zero();
  if (g.json_out) {
    json polys = json::array();
    for (const auto &p : b.polys)
      polys.push_back(p.str());
    print_json({{"variables", sys.front().nvars()},
                {"basis", polys},
                {"no_common_zero", unit},
                {"pairs_reduced", b.pairs_reduced},
                {"pairs_skipped", b.pairs_skipped}});
  } else {
    std::cout << "reduced grevlex basis (" << b.polys.size() << "):\n";
    for (const auto &p : b.polys)
      std::cout << "  " << p.str() << "\n";
    std::cout << (unit ? "no common zero" : "common zeros exist over C") << "\n";
  }
  return kPass;
}

int cmd_norton(const Global &g, std::size_t n)
{
  auto a = norton_build(n);
  auto ids = check_norton_identities(a);
  auto nil = norton_nilpotents(n);
  std::optional<WitnessOrbits> wit;
  auto [p, k] = prime_power(n);
  if (p && p != 2 && n > 3)
    wit = sn_witness_orbits(n, false);
  bool ok = ids.ok && nil.identity_verified && (n % 2 ? nil.none : nil.family_verified);
  if (g.json_out) {
    json j{{"n", n},
           {"dim_U", a.pairs.size()},
           {"dim_W", n - 1},
           {"identities", ids.ok},
           {"square_identity", nil.identity_verified},
           {"degenerate", nil.degenerate},
           {"nilpotent_free", nil.none},
           {"family_size", nil.family.size()},
           {"family_verified", nil.family_verified},
           {"description", nil.description}};
    if (wit)
      j["witness_orbits"] = {{"x", wit->x},
                             {"y", wit->y},
                             {"orbit_x", wit->orbit_x},
                             {"orbit_y", wit->orbit_y},
                             {"gcd_v", wit->gcd_v},
                             {"gcd_vminus", wit->gcd_vminus}};
    print_json(j);
  } else {
    std::cout << "Norton algebra for S_" << n << ": dim U = " << a.pairs.size()
              << ", dim W = " << n - 1 << "\n"
              << "identities          " << (ids.ok ? "hold" : "FAIL") << "\n"
              << "<w.w, f_k>          (n-4) z_k^2 + sigma_2 "
              << (nil.identity_verified ? "verified" : "FAILS") << "\n"
              << nil.description << "\n";
    if (wit)
      std::cout << "witness orbits      |G x| = " << wit->orbit_x << ", |G y| = " << wit->orbit_y
                << ", gcd " << wit->gcd_v << " on V, " << wit->gcd_vminus << " on V-\n";
  }
  return ok ? kPass : kFail;
}

std::vector<std::size_t> parse_char_ids(const std::string &s)
{
  std::vector<std::size_t> out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, '+')) {
    try {
      std::size_t pos = 0;
      auto v = std::stoul(tok, &pos);
      if (pos != tok.size())
        throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception &) {
      throw InvalidArgument("bad character id '" + tok + "' (expected e.g. 2+3)");
    }
  }
  return out;
}

int cmd_quadmap_build(const Global &g, const std::string &source, const std::string &target)
{
  MatrixRep rep = load_rep(resolve(g, source, "reps"));
  TablePtr t = compute_table_dixon(rep.group);
  auto ids = parse_char_ids(target);
  ClassFunction chi = pick_char(t, ids.front());
  for (std::size_t k = 1; k < ids.size(); ++k)
    chi += pick_char(t, ids[k]);
  QuadraticMap phi = quad_map_build(rep, chi, t);
  auto pc = check_projection(phi, to_rational_integer(chi.degree()));
  auto eq = check_equivariance(phi);
  auto ad = admissibility_check(phi);
  if (g.json_out) {
    json comps = json::array(), proj = json::array();
    for (const auto &p : phi.components)
      comps.push_back(p.str());
    for (Eigen::Index r = 0; r < phi.projection.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < phi.projection.cols(); ++c)
        row.push_back(to_string(phi.projection(r, c)));
      proj.push_back(row);
    }
    print_json({{"source", rep.name},
                {"target", target},
                {"components", comps},
                {"projection", proj},
                {"idempotent", pc.idempotent},
                {"commutes", pc.commutes},
                {"trace", to_string(pc.trace)},
                {"equivariant", eq.ok},
                {"route", eq.route},
                {"admissible", ad.admissible}});
  } else {
    std::cout << "phi: " << rep.name << " -> chi " << target << ", " << phi.target_dim
              << " components\n";
    for (std::size_t k = 0; k < phi.components.size(); ++k)
      std::cout << "  phi_" << k + 1 << " = " << phi.components[k].str() << "\n";
    std::cout << "projection        " << (pc.ok ? "idempotent, commuting, trace " : "FAILS, trace ")
              << to_string(pc.trace) << "\n"
              << "equivariance      " << (eq.ok ? "holds" : "FAILS") << " (" << eq.route << ")\n"
              << "admissible        " << (ad.admissible ? "yes" : "no") << "\n";
  }
  return pc.ok && eq.ok ? kPass : kFail;
}

int cmd_quadmap_check(const Global &g, const std::string &file)
{
  auto sys = parse_polynomial_system(read_file(file));
  for (const auto &p : sys)
    if (!p.is_homogeneous())
      throw InvalidArgument("components must be homogeneous: " + p.str());
  auto ad = admissibility_check(sys);
  if (g.json_out) {
    json certs = json::array();
    for (const auto &c : ad.certificates) {
      json b = json::array();
      for (const auto &p : c.polys)
        b.push_back(p.str());
      certs.push_back(b);
    }
    print_json({{"admissible", ad.admissible}, {"certificates", certs}});
  } else {
    for (std::size_t k = 0; k < ad.certificates.size(); ++k) {
      std::cout << "x" << k + 1 << " = 1: {";
      const auto &b = ad.certificates[k].polys;
      for (std::size_t i = 0; i < b.size(); ++i)
        std::cout << (i ? ", " : "") << b[i].str();
      std::cout << "}\n";
    }
    std::cout << (ad.admissible ? "admissible" : "not admissible") << "\n";
  }
  return ad.admissible ? kPass : kFail;
}

int cmd_congruence(const Global &g, std::uint64_t a, unsigned k, unsigned dim,
                   const std::string &context)
{
  auto r = congruence_report(a, k, dim, context);
  if (g.json_out)
    print_json({{"alpha", r.alpha},
                {"k", r.k},
                {"dim", r.dim},
                {"reference_degree", r.reference_degree.str()},
                {"residue", r.residue},
                {"informative", r.informative},
                {"context", r.context},
                {"statement", r.statement}});
  else
    std::cout << (context.empty() ? "" : context + ": ") << r.statement << "\n";
  return kPass;
}

int cmd_verify(const Global &g, bool stretch, bool verbose, bool timing,
               const std::vector<int> &only, unsigned jobs)
{
  AcceptanceOptions o;
  o.data_dir = g.data_dir;
  o.include_stretch = stretch;
  o.verbose = verbose;
  o.timing = timing;
  o.only = {only.begin(), only.end()};
  o.jobs = jobs;
  for (int id : only)
    if (id < 1 || id > criterion_count())
      throw InvalidArgument("no criterion " + std::to_string(id));
  auto rep = run_acceptance(o, g.json_out ? nullptr : &std::cout);
  bool bound = false;
  for (const auto &c : rep.criteria)
    bound = bound || (c.bound_exceeded && !c.stretch);
  if (g.json_out) {
    json rows = json::array();
    for (const auto &c : rep.criteria)
      rows.push_back({{"id", c.id},
                      {"title", c.title},
                      {"stretch", c.stretch},
                      {"status", c.skipped ? "skip" : c.pass ? "pass" : "fail"},
                      {"failures", c.failures},
                      {"notes", c.notes}});
    print_json({{"criteria", rows}, {"ok", rep.ok()}});
  }
  if (rep.ok())
    return kPass;
  return bound ? kBound : kFail;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"alpha-characteristics of finite group representations"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--data", g.data_dir, "bundled data directory");
  app.add_flag("--json", g.json_out, "machine-readable output");
  app.add_option("--bound", g.bound, "element enumeration bound");

  std::string file, table_file, group_file, out, mode, target, context;
  std::size_t char_id = 0, n = 0;
  bool dot = false, stretch = false, verbose = false, timing = false;
  std::uint64_t a = 1;
  unsigned k = 2, dim = 1, jobs = 0;
  std::vector<int> only;
  std::function<int()> action;

  auto *group = app.add_subcommand("group", "permutation group queries");
  group->require_subcommand(1);
  auto *info = group->add_subcommand("info", "order, solvability, class count");
  info->add_option("file", file, "group file")->required();
  info->callback([&] { action = [&] { return cmd_group_info(g, file); }; });

  auto *chartab = app.add_subcommand("chartab", "character tables");
  chartab->require_subcommand(1);
  for (const char *m : {"compute", "load", "show"}) {
    auto *s = chartab->add_subcommand(m, std::string(m) + " a character table");
    s->add_option("file", file, std::string(m) == "compute" ? "group file" : "table file")
        ->required();
    if (std::string(m) != "compute")
      s->add_option("--group", group_file, "group realizing the table");
    s->add_option("--out", out, "write the table to a file");
    s->callback([&, m] {
      mode = m;
      action = [&] { return cmd_chartab(g, mode, file, group_file, out); };
    });
  }

  auto *alpha_cmd = app.add_subcommand("alpha", "alpha-characteristic of irreducibles");
  alpha_cmd->add_option("group", file, "group file")->required();
  alpha_cmd->add_option("--char", char_id, "1-based irreducible index");
  alpha_cmd->add_option("--table", table_file, "character table file");
  alpha_cmd->callback([&] { action = [&] { return cmd_alpha(g, file, char_id, table_file); }; });

  auto *ot = app.add_subcommand("orbit-types", "lattice of orbit types");
  ot->add_option("group", file, "group file")->required();
  ot->add_option("--char", char_id, "1-based irreducible index")->required();
  ot->add_option("--table", table_file, "character table file");
  ot->add_flag("--dot", dot, "Graphviz output");
  ot->callback([&] {
    action = [&] { return cmd_orbit_types(g, file, char_id, table_file, dot); };
  });

  auto *sc = app.add_subcommand("solvable-check", "solvability against the alpha criterion");
  sc->add_option("group", file, "group file")->required();
  sc->add_option("--table", table_file, "character table file");
  sc->callback([&] { action = [&] { return cmd_solvable_check(g, file, table_file); }; });

  auto *st = app.add_subcommand("scan-trivial", "is alpha = 1 for every irreducible");
  st->add_option("group", file, "group file")->required();
  st->add_option("--table", table_file, "character table file");
  st->callback([&] { action = [&] { return cmd_scan_trivial(g, file, table_file); }; });

  auto *tt = app.add_subcommand("twotrans", "2-transitive actions");
  tt->require_subcommand(1);
  auto *scan = tt->add_subcommand("scan", "augmentation characters of 2-transitive actions");
  scan->add_option("group", file, "group file")->required();
  scan->add_option("--table", table_file, "character table file");
  scan->callback([&] { action = [&] { return cmd_twotrans_scan(g, file, table_file); }; });
  auto *vt = tt->add_subcommand("verify-table", "check the classification excerpt");
  vt->add_option("file", file, "excerpt file")->required();
  vt->callback([&] { action = [&] { return cmd_twotrans_verify(g, file); }; });

  auto *gb = app.add_subcommand("groebner", "reduced Groebner basis of a polynomial file");
  gb->add_option("file", file, "one polynomial per line")->required();
  gb->callback([&] { action = [&] { return cmd_groebner(g, file); }; });

  auto *nt = app.add_subcommand("norton", "Norton algebra of S_n");
  nt->add_option("n", n, "number of points")->required()->check(CLI::Range(3, 40));
  nt->callback([&] { action = [&] { return cmd_norton(g, n); }; });

  auto *qm = app.add_subcommand("quadmap", "2-homogeneous equivariant maps");
  qm->require_subcommand(1);
  auto *qb = qm->add_subcommand("build", "project Sym^2 of a representation");
  qb->add_option("--source", file, "representation file")->required();
  qb->add_option("--target", target, "irreducible ids, e.g. 2+3")->required();
  qb->callback([&] { action = [&] { return cmd_quadmap_build(g, file, target); }; });
  auto *qc = qm->add_subcommand("check", "admissibility of homogeneous components");
  qc->add_option("file", file, "one component per line")->required();
  qc->callback([&] { action = [&] { return cmd_quadmap_check(g, file); }; });

  auto *cg = app.add_subcommand("congruence", "degree congruence from alpha");
  cg->add_option("--alpha", a, "alpha-characteristic")->required()->check(CLI::PositiveNumber);
  cg->add_option("--k", k, "homogeneity degree")->check(CLI::PositiveNumber);
  cg->add_option("--dim", dim, "dimension of the source")->required();
  cg->add_option("--context", context, "label");
  cg->callback([&] { action = [&] { return cmd_congruence(g, a, k, dim, context); }; });

  auto *vp = app.add_subcommand("verify-paper", "run the reproduction checks");
  vp->add_flag("--include-stretch", stretch, "also run the stretch checks");
  vp->add_flag("--verbose", verbose, "print notes");
  vp->add_flag("--timing", timing, "print wall-clock times");
  vp->add_option("--only", only, "criterion ids")->delimiter(',');
  vp->add_option("--jobs", jobs, "parallel criteria (0: all)");
  vp->callback([&] {
    action = [&] { return cmd_verify(g, stretch, verbose, timing, only, jobs); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  if (g.bound)
    bounds().elements = g.bound;
  try {
    return action ? action() : kUsage;
  } catch (const BoundExceeded &e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const InvalidArgument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
