#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "flipgray/coloured_permutation.hpp"

namespace flipgray {

/// Default cap on entries held by exponential-memory consumers (greedy's
/// visited set, the listing verifier).
inline constexpr std::uint64_t kDefaultMemoryBudget = 10'000'000;

enum class GreedyPriority { MinFlip, MaxFlip };

/// Result of a greedy walk: the path built, whether it covered all of
/// CPERMS(n,k), and whether one flip closes it back to the start.
struct GreedyOutcome {
  std::vector<ColouredPermutation> listing;
  bool exhaustive;
  bool cyclic;
};

/// Greedy walk from 1^0 2^0 ... n^0, extending along the highest-priority
/// flip that reaches an unvisited permutation.  Min-flip priority yields the
/// canonical cyclic Gray code; max-flip gets stuck for k > 2.
/// Throws CapacityError when k^n * n! exceeds memory_budget.
GreedyOutcome greedy(int n, int k, GreedyPriority priority,
                     std::uint64_t memory_budget = kDefaultMemoryBudget);

/// Recursive listing of all completions of a pre-perm by extension order:
/// the k*j sublists indexed m down to 1, each sublist recursing on the
/// corresponding circular-word window.  First entry is p; the last is
/// reverse(shift(p, k-1)).
std::vector<PrePerm> rec_listing(const PrePerm& p);
std::vector<ColouredPermutation> rec_listing(const ColouredPermutation& pi);

/// Flip length mapping pi to its cyclic successor in the canonical listing
/// started at 1^0 2^0 ... n^0.  Total on CPERMS(n,k); O(n) worst case.
int successor(const ColouredPermutation& pi);

/// Repeatedly applies the successor rule from the canonical start until the
/// start recurs.
std::vector<ColouredPermutation> generate_by_successor(int n, int k);

/// Streams the listing started at `start`, driven by the loop-free flip
/// sequence: each permutation is visited exactly once, in order, then
/// on_cycle_close receives the flip length (always n) that returns the last
/// permutation to the first.  O(1)-amortized per visit; no listing storage.
void stream_by_flipseq(const ColouredPermutation& start,
                       const std::function<void(const ColouredPermutation&)>& visit,
                       const std::function<void(int)>& on_cycle_close = nullptr);

std::vector<ColouredPermutation> generate_by_flipseq(const ColouredPermutation& start);
std::vector<ColouredPermutation> generate_by_flipseq(int n, int k);

/// Injective 64-bit encoding of a permutation (mixed-radix packing of
/// value/colour pairs).  Used as the visited-set key by greedy and the
/// verifier.  Throws CapacityError if (n*k)^n overflows 64 bits.
std::uint64_t pack_key(const ColouredPermutation& pi);

}  // namespace flipgray
