#pragma once

#include <cstdint>
#include <string>

#include "alpharep/rational.hpp"

namespace alpharep {

struct CongruenceReport {
  std::uint64_t alpha = 1;
  unsigned k = 2;
  unsigned dim = 1;
  Integer reference_degree; // k^dim
  std::uint64_t residue = 0;
  bool informative = false; // alpha > 1
  std::string context;
  std::string statement; // e.g. "deg = 16 = 6 (mod 10)" with congruence signs
};

CongruenceReport congruence_report(std::uint64_t alpha, unsigned k, unsigned dim,
                                   std::string context = {});

} // namespace alpharep
