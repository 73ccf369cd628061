#pragma once

#include <istream>
#include <optional>
#include <string>

#include "alpharep/char_table.hpp"

namespace alpharep {

// Rejects tables failing validate_table. With a group, columns are
// located through power maps.
TablePtr read_table(std::istream &in, const std::string &source = "<input>",
                    const std::optional<PermGroup> &group = std::nullopt);
TablePtr load_table(const std::string &path, const std::optional<PermGroup> &group = std::nullopt);
std::string write_table(const CharacterTable &t);

} // namespace alpharep
