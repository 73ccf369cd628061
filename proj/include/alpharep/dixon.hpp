#pragma once

#include <cstdint>

#include "alpharep/char_table.hpp"

namespace alpharep {

// Burnside-Dixon over F_q, lifted to cyclotomics. Columns follow the
// FiniteGroup class order; rows are sorted by degree then values, with the
// trivial character first. Throws BoundExceeded above bounds().dixon.
TablePtr compute_table_dixon(const PermGroup &g);

// Smallest prime q = 1 mod e with q^2 > 4 * order.
std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order);

} // namespace alpharep
