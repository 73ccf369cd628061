#include "alpharep/group_io.hpp"

#include <fstream>
#include <sstream>

#include "alpharep/errors.hpp"

namespace alpharep {

PermGroup read_group(std::istream &in, const std::string &source)
{
  std::size_t degree = 0;
  std::string name;
  std::vector<std::string> gens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key))
      continue;
    std::string rest;
    std::getline(ls, rest);
    auto b = rest.find_first_not_of(" \t");
    rest = b == std::string::npos ? "" : rest.substr(b);
    if (key == "degree") {
      try {
        degree = std::stoul(rest);
      } catch (const std::exception &) {
        throw ParseError(source + ":" + std::to_string(lineno) + ": bad degree");
      }
    } else if (key == "gen") {
      gens.push_back(rest);
    } else if (key == "name") {
      name = rest;
    } else {
      throw ParseError(source + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (degree == 0)
    throw ParseError(source + ": missing degree");
  std::vector<Permutation> perms;
  for (const auto &g : gens) {
    try {
      perms.push_back(parse_permutation(g, degree));
    } catch (const ParseError &e) {
      throw ParseError(source + ": " + e.what());
    }
  }
  PermGroup g(std::move(perms), degree);
  g.set_name(name);
  return g;
}

PermGroup load_group(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open group file " + path);
  PermGroup g = read_group(in, path);
  if (g.name().empty()) {
    auto slash = path.find_last_of('/');
    std::string base = path.substr(slash == std::string::npos ? 0 : slash + 1);
    g.set_name(base.substr(0, base.find('.')));
  }
  return g;
}

std::string write_group(const PermGroup &g)
{
  std::ostringstream os;
  if (!g.name().empty())
    os << "name " << g.name() << "\n";
  os << "degree " << g.degree() << "\n";
  for (const auto &x : g.generators())
    os << "gen " << x.str() << "\n";
  return os.str();
}

} // namespace alpharep
