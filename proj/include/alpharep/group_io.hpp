#pragma once

#include <istream>
#include <string>

#include "alpharep/perm_group.hpp"

namespace alpharep {

// Lines: "degree N", "gen <cycles>", optional "name <text>"; '#' comments.
PermGroup read_group(std::istream &in, const std::string &source = "<input>");
PermGroup load_group(const std::string &path);
std::string write_group(const PermGroup &g);

} // namespace alpharep
