#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alpharep/char_table.hpp"
#include "alpharep/linalg.hpp"
#include "alpharep/perm_group.hpp"

namespace alpharep {

// (degree, alpha) pairs, compared as multisets.
using AlphaPairs = std::vector<std::pair<std::int64_t, std::uint64_t>>;

// "published" values are transcribed, "computed" ones come from an
// independent derivation.
struct ExpectedAlpha {
  std::string source;
  bool complete = true; // false: the values form a sub-multiset
  AlphaPairs values;
};

struct ExpectedLattice {
  std::int64_t degree = 0;
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges; // (upper, lower)
};

struct CorpusEntry {
  std::string name;
  std::string group_file;
  std::optional<std::string> table_file;
  std::optional<ExpectedAlpha> alpha;
  std::string lattice_source;
  std::vector<ExpectedLattice> lattices;
  std::set<std::string> tags; // solvable, 2-transitive, stretch

  bool has_tag(const std::string &t) const { return tags.count(t) > 0; }
};

struct TwoTransFixture {
  std::string group;
  std::string source;
  AlphaPairs values; // (augmentation degree, alpha)
};

struct ProjectionFixture {
  std::string rep_file;
  std::string source;
  std::int64_t trace = 0;
  MatQ printed;
};

struct QuadMapFixture {
  std::string name;
  MatQ basis; // columns in the Sym^2 basis
  std::vector<std::string> components;
};

struct CongruenceFixture {
  std::string context;
  std::string group;
  unsigned k = 2;
  unsigned dim = 1;
  std::string source;
  std::string statement;
};

struct Corpus {
  std::string dir;
  std::vector<CorpusEntry> entries;
  std::vector<TwoTransFixture> two_transitive;
  ProjectionFixture projection;
  std::string quad_rep_file;
  std::vector<QuadMapFixture> quad_maps;
  std::vector<CongruenceFixture> congruence;

  // Throws InvalidArgument for unknown names.
  const CorpusEntry &entry(const std::string &name) const;
  std::string group_path(const CorpusEntry &e) const;
  std::string table_path(const CorpusEntry &e) const;
  std::string rep_path(const std::string &file) const;
};

// Compile-time data directory of the source tree.
std::string default_data_dir();

// Reads <dir>/corpus.json and checks that every referenced file exists.
Corpus load_corpus(const std::string &dir);

bool same_multiset(AlphaPairs a, AlphaPairs b);
bool sub_multiset(AlphaPairs part, AlphaPairs whole);
std::string format_pairs(AlphaPairs v);

} // namespace alpharep
