#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alpharep/alpha.hpp"
#include "alpharep/char_table.hpp"

namespace alpharep {

struct TwoTransRecord {
  std::string group;
  std::size_t stabilizer_class = 0;
  std::uint64_t stabilizer_order = 1;
  std::string stabilizer_name;
  std::uint64_t degree = 1;
  std::uint64_t q = 0; // degree = q^k, or 0
  unsigned k = 0;
  bool faithful = false;
  std::uint64_t kernel_order = 1;
  std::optional<std::size_t> augmentation_index; // row in the group's table
  std::uint64_t alpha = 1;
};

struct AugmentationCriterion {
  std::uint64_t degree = 1;
  std::uint64_t q = 0;
  unsigned k = 0;
  std::uint64_t alpha = 1;
  std::string prediction; // "q | alpha" or "alpha = 1"
  bool consistent = false;
};

// H < G proper; alpha of the augmentation of G on G/H.
AugmentationCriterion augmentation_alpha_criterion(const PermGroup &g, const PermGroup &h);

// One record per subgroup class H with <1_H^G, 1_H^G> = 2.
std::vector<TwoTransRecord> scan_2transitive(const TablePtr &t);

// Orbits of G on ordered pairs of distinct points.
bool is_2transitive(const PermGroup &image);

struct SocleReport {
  std::uint64_t degree = 1;
  bool two_transitive = false;
  std::uint64_t socle_order = 1;
  bool socle_elementary_abelian = false;
  bool socle_regular = false;
  bool socle_nonabelian_simple = false;
  std::string branch; // "affine", "almost simple" or "other"
  std::uint64_t q = 0;
  std::uint64_t alpha = 1;
  bool ok = false;
};
// Requires a faithful transitive action.
SocleReport affine_socle_check(const GroupAction &action);

struct ExcerptCheck {
  std::string groups;
  std::uint64_t degree = 0;
  std::optional<std::uint64_t> expected_count;
  std::optional<std::uint64_t> count;
  bool prime_power = false;
  std::vector<std::uint64_t> alphas;
  bool ok = false;
  std::string note;
};

struct ExcerptRow {
  std::string degree, socle, max_outer, actions;
  bool data_only = false;
  std::vector<ExcerptCheck> checks;
  bool ok = true;
};

struct ExcerptReport {
  std::vector<ExcerptRow> rows;
  bool ok = true;
};

// Rows "degree | socle | max |G/N| | actions | checks"; checks are
// "g1.grp+g2.grp:degree[:count]" separated by commas, or "data-only".
ExcerptReport verify_classification_excerpt(const std::string &path, const std::string &group_dir);

} // namespace alpharep
