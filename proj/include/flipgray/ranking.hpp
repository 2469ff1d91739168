#pragma once

#include <cstdint>

#include "flipgray/coloured_permutation.hpp"

namespace flipgray {

/// 1-based position of pi in the canonical listing started at
/// 1^0 2^0 ... n^0.  O(n^2).
std::uint64_t rank(const ColouredPermutation& pi);

/// The permutation at position r (1-based) of the canonical listing.
/// Throws std::out_of_range unless 1 <= r <= k^n * n!, CapacityError when
/// that size overflows 64 bits.
ColouredPermutation unrank(std::uint64_t r, int n, int k);

}  // namespace flipgray
