#include "alpharep/table_io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "alpharep/errors.hpp"

namespace alpharep {

namespace {

std::vector<std::string> words(const std::string &s)
{
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w)
    out.push_back(w);
  return out;
}

std::uint64_t to_u64(const std::string &w, const std::string &where)
{
  try {
    std::size_t used = 0;
    auto v = std::stoull(w, &used);
    if (used != w.size())
      throw std::invalid_argument(w);
    return v;
  } catch (const std::exception &) {
    throw ParseError(where + ": expected a non-negative integer, got '" + w + "'");
  }
}

} // namespace

TablePtr read_table(std::istream &in, const std::string &source,
                    const std::optional<PermGroup> &group)
{
  auto t = std::make_shared<CharacterTable>();
  std::size_t k = 0;
  bool have_order = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where = source + ":" + std::to_string(lineno);
    if (auto h = line.find('#'); h != std::string::npos)
      line.erase(h);
    auto ws = words(line);
    if (ws.empty())
      continue;
    const std::string &key = ws[0];
    auto need_k = [&] {
      if (k == 0)
        throw ParseError(where + ": 'classes' must come before '" + key + "'");
    };
    auto check_len = [&](std::size_t got) {
      if (got != k)
        throw ParseError(where + ": expected " + std::to_string(k) + " entries, got " +
                         std::to_string(got));
    };
    if (key == "group") {
      t->name = line.substr(line.find("group") + 5);
      t->name.erase(0, t->name.find_first_not_of(" \t"));
      t->name.erase(t->name.find_last_not_of(" \t\r") + 1);
    } else if (key == "order") {
      t->order = to_u64(ws.at(1), where);
      have_order = true;
    } else if (key == "classes") {
      k = to_u64(ws.at(1), where);
      if (k == 0)
        throw ParseError(where + ": zero classes");
    } else if (key == "sizes" || key == "orders") {
      need_k();
      check_len(ws.size() - 1);
      auto &dst = key == "sizes" ? t->sizes : t->orders;
      dst.clear();
      for (std::size_t i = 1; i < ws.size(); ++i)
        dst.push_back(to_u64(ws[i], where));
    } else if (key == "powermap") {
      need_k();
      if (ws.size() < 2 || ws[1].back() != ':')
        throw ParseError(where + ": expected 'powermap p: ...'");
      std::uint64_t p = to_u64(ws[1].substr(0, ws[1].size() - 1), where);
      check_len(ws.size() - 2);
      std::vector<std::size_t> pm;
      for (std::size_t i = 2; i < ws.size(); ++i) {
        auto c = to_u64(ws[i], where);
        if (c < 1 || c > k)
          throw ParseError(where + ": class index " + ws[i] + " out of range");
        pm.push_back(c - 1);
      }
      t->power_maps[p] = std::move(pm);
    } else if (key.rfind("chi_", 0) == 0 && key.back() == ':') {
      need_k();
      auto j = to_u64(key.substr(4, key.size() - 5), where);
      if (j != t->irr.size() + 1)
        throw ParseError(where + ": characters must be numbered consecutively from 1");
      check_len(ws.size() - 1);
      std::vector<Cyclotomic> row;
      for (std::size_t i = 1; i < ws.size(); ++i) {
        try {
          row.push_back(parse_cyclotomic(ws[i]));
        } catch (const ParseError &e) {
          throw ParseError(where + ": " + e.what());
        }
      }
      t->irr.push_back(std::move(row));
    } else {
      throw ParseError(where + ": unknown key '" + key + "'");
    }
  }
  if (k == 0 || t->sizes.size() != k || t->orders.size() != k)
    throw ParseError(source + ": missing classes, sizes or orders");
  std::uint64_t total = 0;
  for (auto s : t->sizes)
    total += s;
  if (!have_order)
    t->order = total;
  for (const auto &[p, pm] : t->power_maps)
    for (std::size_t c = 0; c < k; ++c)
      if (t->orders[pm[c]] != t->orders[c] / std::gcd(t->orders[c], p))
        throw DataError(source + ": power map " + std::to_string(p) +
                        " sends class " + std::to_string(c + 1) + " to a class of the wrong order");
  if (auto err = validate_table(*t); !err.empty())
    throw DataError(source + ": " + err);
  if (group)
    attach_group(*t, *group);
  return t;
}

TablePtr load_table(const std::string &path, const std::optional<PermGroup> &group)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open table file " + path);
  return read_table(in, path, group);
}

std::string write_table(const CharacterTable &t)
{
  std::ostringstream os;
  os << "group " << t.name << "\n";
  os << "order " << t.order << "\n";
  os << "classes " << t.class_count() << "\n";
  os << "sizes";
  for (auto s : t.sizes)
    os << " " << s;
  os << "\norders";
  for (auto o : t.orders)
    os << " " << o;
  os << "\n";
  for (const auto &[p, pm] : t.power_maps) {
    os << "powermap " << p << ":";
    for (auto c : pm)
      os << " " << c + 1;
    os << "\n";
  }
  for (std::size_t i = 0; i < t.irr.size(); ++i) {
    os << "chi_" << i + 1 << ":";
    for (const auto &v : t.irr[i])
      os << " " << v.str();
    os << "\n";
  }
  return os.str();
}

} // namespace alpharep
