#include "alpharep/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "alpharep/errors.hpp"
#include "alpharep/rational.hpp"

namespace alpharep {

namespace {

using nlohmann::json;

AlphaPairs read_pairs(const json &j)
{
  AlphaPairs out;
  for (const auto &p : j)
    out.emplace_back(p.at(0).get<std::int64_t>(), p.at(1).get<std::uint64_t>());
  return out;
}

MatQ read_matrix(const json &rows)
{
  auto r = static_cast<Eigen::Index>(rows.size());
  auto c = r ? static_cast<Eigen::Index>(rows.at(0).size()) : 0;
  MatQ m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const auto &row = rows.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != c)
      throw ParseError("ragged matrix in corpus");
    for (Eigen::Index k = 0; k < c; ++k)
      m(i, k) = parse_rational(row.at(static_cast<std::size_t>(k)).get<std::string>());
  }
  return m;
}

CorpusEntry read_entry(const json &j)
{
  CorpusEntry e;
  e.name = j.at("name").get<std::string>();
  e.group_file = j.at("group").get<std::string>();
  if (j.contains("table"))
    e.table_file = j.at("table").get<std::string>();
  for (const auto &t : j.value("tags", json::array()))
    e.tags.insert(t.get<std::string>());
  if (j.contains("alpha")) {
    const auto &a = j.at("alpha");
    e.alpha = ExpectedAlpha{a.at("source").get<std::string>(), a.value("complete", true),
                            read_pairs(a.at("values"))};
  }
  if (j.contains("lattices")) {
    const auto &l = j.at("lattices");
    e.lattice_source = l.at("source").get<std::string>();
    for (const auto &d : l.at("by_degree")) {
      ExpectedLattice x;
      x.degree = d.at("degree").get<std::int64_t>();
      x.nodes = d.at("nodes").get<std::vector<std::string>>();
      for (const auto &edge : d.at("edges"))
        x.edges.emplace_back(edge.at(0).get<std::string>(), edge.at(1).get<std::string>());
      e.lattices.push_back(std::move(x));
    }
  }
  return e;
}

void require_file(const std::string &path)
{
  if (!std::filesystem::is_regular_file(path))
    throw InvalidArgument("missing corpus file " + path);
}

} // namespace

std::string default_data_dir()
{
#ifdef ALPHAREP_DATA_DIR
  return ALPHAREP_DATA_DIR;
#else
  return "data";
#endif
}

const CorpusEntry &Corpus::entry(const std::string &name) const
{
  for (const auto &e : entries)
    if (e.name == name)
      return e;
  throw InvalidArgument("no corpus entry named " + name);
}

std::string Corpus::group_path(const CorpusEntry &e) const
{
  return dir + "/groups/" + e.group_file;
}

std::string Corpus::table_path(const CorpusEntry &e) const
{
  if (!e.table_file)
    throw InvalidArgument(e.name + " has no bundled table");
  return dir + "/tables/" + *e.table_file;
}

std::string Corpus::rep_path(const std::string &file) const { return dir + "/reps/" + file; }

Corpus load_corpus(const std::string &dir)
{
  std::string path = dir + "/corpus.json";
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("missing corpus file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    throw ParseError(path + ": " + e.what());
  }

  Corpus c;
  c.dir = dir;
  try {
    for (const auto &e : j.at("groups"))
      c.entries.push_back(read_entry(e));
    for (const auto &t : j.at("two_transitive"))
      c.two_transitive.push_back({t.at("group").get<std::string>(),
                                  t.at("source").get<std::string>(), read_pairs(t.at("values"))});
    const auto &p = j.at("projection");
    c.projection = {p.at("rep").get<std::string>(), p.at("source").get<std::string>(),
                    p.at("trace").get<std::int64_t>(), read_matrix(p.at("rows"))};
    const auto &q = j.at("quadratic_maps");
    c.quad_rep_file = q.at("rep").get<std::string>();
    for (const auto &m : q.at("maps"))
      c.quad_maps.push_back({m.at("name").get<std::string>(), read_matrix(m.at("basis")),
                             m.at("components").get<std::vector<std::string>>()});
    for (const auto &k : j.at("congruence"))
      c.congruence.push_back({k.at("context").get<std::string>(), k.at("group").get<std::string>(),
                              k.at("k").get<unsigned>(), k.at("dim").get<unsigned>(),
                              k.at("source").get<std::string>(),
                              k.at("statement").get<std::string>()});
  } catch (const json::exception &e) {
    throw ParseError(path + ": " + e.what());
  }

  for (const auto &e : c.entries) {
    require_file(c.group_path(e));
    if (e.table_file)
      require_file(c.table_path(e));
  }
  require_file(c.rep_path(c.projection.rep_file));
  require_file(c.rep_path(c.quad_rep_file));
  return c;
}

bool same_multiset(AlphaPairs a, AlphaPairs b)
{
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool sub_multiset(AlphaPairs part, AlphaPairs whole)
{
  std::sort(part.begin(), part.end());
  std::sort(whole.begin(), whole.end());
  return std::includes(whole.begin(), whole.end(), part.begin(), part.end());
}

std::string format_pairs(AlphaPairs v)
{
  std::sort(v.begin(), v.end());
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? " " : "") << v[i].first << ":" << v[i].second;
  os << "}";
  return os.str();
}

} // namespace alpharep
