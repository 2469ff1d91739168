#pragma once

#include <cstdint>
#include <vector>

#include "flipgray/coloured_permutation.hpp"

namespace flipgray {

/// The flip lengths that drive the canonical listing of k-coloured
/// permutations of n values; always k^n * n! - 1 entries.
struct FlipSequence {
  int n;
  int k;
  std::vector<int> lengths;
};

/// Materializes the full flip sequence from its recurrence.  Throws
/// CapacityError when k^n * n! overflows 64 bits.
FlipSequence sigma_recursive(int n, int k);

/// Loop-free iterator over the flip sequence.  Each next() does a constant
/// number of operations.  The first returned value greater than n is a
/// termination sentinel (always n+1) and is not part of the sequence; calling
/// next() again afterwards throws std::logic_error.
///
/// Single-owner mutable state; distinct iterators are independent.
class FlipSequenceIterator {
 public:
  FlipSequenceIterator(int n, int k);

  int next();
  bool is_terminated() const noexcept { return terminated_; }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  /// Elementary operations spent in the most recent next() call; exposed so
  /// tests can assert the constant per-call bound.
  int ops_in_last_call() const noexcept { return ops_; }

  /// Counter array c_1..c_{n+1} (index 0 unused), for instrumented checks.
  const std::vector<int>& counters() const noexcept { return counters_; }

 private:
  int n_;
  int k_;
  std::vector<int> counters_;
  std::vector<int> flip_values_;
  bool terminated_ = false;
  int ops_ = 0;
};

}  // namespace flipgray
