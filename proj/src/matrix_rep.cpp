#include "alpharep/matrix_rep.hpp"

#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "alpharep/errors.hpp"
#include "alpharep/group_io.hpp"

namespace alpharep {

bool MatrixRep::rational() const
{
  for (const auto &m : generators)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_rational())
          return false;
  return true;
}

std::vector<RepElement> enumerate_rep(const MatrixRep &rep)
{
  const auto &gens = rep.group.generators();
  if (gens.size() != rep.generators.size())
    throw DataError(rep.name + ": " + std::to_string(rep.generators.size()) +
                    " matrices for " + std::to_string(gens.size()) + " generators");
  auto d = static_cast<Eigen::Index>(rep.dim);
  std::vector<RepElement> out;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  out.push_back({Permutation(rep.group.degree()), MatC::Identity(d, d)});
  index.emplace(out[0].g, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation x = gens[s] * out[i].g;
      MatC m = rep.generators[s] * out[i].m;
      auto it = index.find(x);
      if (it == index.end()) {
        index.emplace(x, out.size());
        out.push_back({std::move(x), std::move(m)});
      } else if (out[it->second].m != m) {
        throw DataError(rep.name + ": matrices do not define a homomorphism (conflict at " +
                        x.str() + ")");
      }
    }
  }
  return out;
}

ClassFunction rep_character(const MatrixRep &rep, const TablePtr &t)
{
  if (!t->locator)
    throw InvalidArgument("table cannot locate elements");
  std::vector<Permutation> reps;
  std::vector<Cyclotomic> traces;
  for (auto &e : enumerate_rep(rep)) {
    reps.push_back(e.g);
    traces.push_back(e.m.trace());
  }
  auto cols = t->locator->locate(reps);
  std::vector<std::optional<Cyclotomic>> v(t->class_count());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto &slot = v[cols[i]];
    if (!slot)
      slot = traces[i];
    else if (*slot != traces[i])
      throw DataError(rep.name + ": trace is not a class function");
  }
  std::vector<Cyclotomic> vals;
  for (auto &x : v) {
    if (!x)
      throw DataError(rep.name + ": group does not meet every class of " + t->name);
    vals.push_back(*x);
  }
  return t->make(std::move(vals));
}

MatrixRep contragredient(const MatrixRep &rep)
{
  MatrixRep out = rep;
  out.name = rep.name + "^*";
  for (auto &m : out.generators) {
    auto inv = inverse<Cyclotomic>(m);
    if (!inv)
      throw DataError(rep.name + ": singular generator matrix");
    m = inv->transpose();
  }
  return out;
}

MatrixRep augmentation_rep(std::size_t n, bool sign_twisted)
{
  if (n < 2)
    throw InvalidArgument("augmentation needs n >= 2");
  std::vector<Permutation> gens{parse_permutation("(1 2)", n)};
  if (n > 2) {
    std::vector<Permutation::Point> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = static_cast<Permutation::Point>((i + 1) % n);
    gens.emplace_back(img);
  }
  MatrixRep rep;
  rep.name = sign_twisted ? "V-" : "V";
  rep.group = PermGroup(gens).set_name("S" + std::to_string(n));
  rep.dim = n - 1;
  auto d = static_cast<Eigen::Index>(n - 1);
  for (const auto &g : gens) {
    MatC m = MatC::Zero(d, d);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      auto j = g(static_cast<Permutation::Point>(i));
      if (j + 1 < n)
        m(j, i) = 1;
      else
        for (Eigen::Index r = 0; r < d; ++r)
          m(r, i) = -1;
    }
    if (sign_twisted && g.sign() < 0)
      m = -m;
    rep.generators.push_back(std::move(m));
  }
  return rep;
}

std::vector<std::pair<std::size_t, std::size_t>> sym_basis(std::size_t d)
{
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      out.emplace_back(i, j);
  return out;
}

MatC sym_square_matrix(const MatC &m)
{
  auto basis = sym_basis(static_cast<std::size_t>(m.rows()));
  auto n = static_cast<Eigen::Index>(basis.size());
  MatC s = MatC::Zero(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    auto [i, j] = basis[c];
    for (Eigen::Index r = 0; r < n; ++r) {
      auto [x, y] = basis[r];
      auto xi = static_cast<Eigen::Index>(x), yi = static_cast<Eigen::Index>(y);
      auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
      // coefficient of x_i x_j in (Mx)_x (Mx)_y
      Cyclotomic v = m(xi, ii) * m(yi, jj);
      if (i != j)
        v += m(xi, jj) * m(yi, ii);
      s(r, c) = v;
    }
  }
  return s;
}

MatrixRep sym_square_rep(const MatrixRep &rep)
{
  MatrixRep out;
  out.name = "Sym2(" + rep.name + ")";
  out.group = rep.group;
  out.dim = rep.dim * (rep.dim + 1) / 2;
  for (const auto &m : rep.generators)
    out.generators.push_back(sym_square_matrix(m));
  return out;
}

MatQ to_rational(const MatC &m)
{
  MatQ q(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_rational())
        throw DataError("irrational matrix entry " + m(r, c).str());
      q(r, c) = m(r, c).rational();
    }
  return q;
}

MatC to_cyclotomic(const MatQ &m)
{
  MatC c(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      c(r, k) = Cyclotomic(m(r, k));
  return c;
}

MatrixRep read_rep(std::istream &in, const std::string &source)
{
  MatrixRep rep;
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string &what) {
    throw ParseError(source + ":" + std::to_string(lineno) + ": " + what);
  };
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos)
        line.erase(h);
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        return true;
    }
    return false;
  };
  while (next()) {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    if (key == "name") {
      std::istringstream(rest) >> rep.name;
    } else if (key == "degree") {
      degree = std::stoul(rest);
    } else if (key == "dim") {
      rep.dim = std::stoul(rest);
    } else if (key == "gen") {
      if (!degree || !rep.dim)
        fail("'degree' and 'dim' must precede 'gen'");
      try {
        gens.push_back(parse_permutation(rest, degree));
      } catch (const std::exception &e) {
        fail(e.what());
      }
      auto d = static_cast<Eigen::Index>(rep.dim);
      MatC m(d, d);
      for (Eigen::Index r = 0; r < d; ++r) {
        if (!next())
          fail("matrix ends early");
        std::istringstream rs(line);
        std::string tok;
        Eigen::Index c = 0;
        while (rs >> tok) {
          if (c == d)
            fail("too many entries in row");
          try {
            m(r, c++) = parse_cyclotomic(tok);
          } catch (const std::exception &e) {
            fail(e.what());
          }
        }
        if (c != d)
          fail("too few entries in row");
      }
      rep.generators.push_back(std::move(m));
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (gens.empty())
    throw ParseError(source + ": no generators");
  rep.group = PermGroup(gens);
  rep.group.set_name(rep.name.empty() ? source : rep.name);
  if (rep.name.empty())
    rep.name = source;
  return rep;
}

MatrixRep load_rep(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open " + path);
  return read_rep(in, path);
}

} // namespace alpharep
