#pragma once

#include <cstddef>
#include <vector>

#include "coxkit/laurent.hpp"

namespace coxkit {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Rank over the rationals of the given rows, by fraction-free (Bareiss) elimination.
std::size_t rational_rank(IntMatrix rows);

/// Rows with rational entries; each row is scaled by the lcm of its denominators first.
std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace coxkit
