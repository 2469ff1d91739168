#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flipgray/coloured_permutation.hpp"
#include "flipgray/generation.hpp"

namespace flipgray {

/// Exact rational arithmetic for the flip-length statistics; everything else
/// in the library stays on 64-bit integers.
using Rational = boost::multiprecision::cpp_rational;

struct BadTransition {
  std::uint64_t index;  // 1-based position of the offending entry
  std::string reason;
};

/// Checkable Hamilton-cycle certificate for a listing of CPERMS(n,k).
struct VerificationReport {
  std::uint64_t total_visited = 0;
  std::uint64_t expected = 0;
  std::uint64_t duplicates = 0;
  std::vector<BadTransition> bad_transitions;
  bool cyclic_closure = false;
  bool is_hamilton_cycle = false;
  /// Flip length that maps the last entry to the first, when one exists.
  std::optional<int> closing_flip_length;

  /// Line-oriented key:value text (total, expected, duplicates,
  /// bad_transitions, cyclic, hamilton).
  std::string to_text() const;
};

/// Streaming verifier: feed permutations in listing order, then finish().
/// Duplicate detection is exact (visited-set keyed like greedy's); each
/// transition must be a single flip, recovered from the entries themselves.
/// May consume a stream produced on another thread as long as calls are
/// externally serialized.
class ListingVerifier {
 public:
  ListingVerifier(int n, int k, std::uint64_t memory_budget = kDefaultMemoryBudget);

  void consume(const ColouredPermutation& pi);
  VerificationReport finish();

 private:
  int n_;
  int k_;
  std::uint64_t expected_;
  std::unordered_set<std::uint64_t> visited_;
  std::optional<ColouredPermutation> first_;
  std::optional<ColouredPermutation> previous_;
  VerificationReport report_;
};

VerificationReport verify_listing(const std::vector<ColouredPermutation>& listing, int n, int k);

/// Average flip length of the cyclic listing: the exact closed form, the
/// empirical mean of the actual flip sequence (closing flip included), and a
/// certified rational enclosure of the e^(1/k) upper bound.
struct FlipStats {
  int n = 0;
  int k = 0;
  Rational exact_average;
  std::optional<Rational> empirical_average;  // set when k^n * n! <= the limit
  Rational bound_lower;  // bound_lower < e^(1/k) < bound_upper,
  Rational bound_upper;  // width well under 1e-12

  bool below_bound() const { return exact_average < bound_lower; }
};

FlipStats avg_flip_length(int n, int k, std::uint64_t empirical_limit = 1'000'000);

/// Rational enclosure of e^(1/k) by partial sums of its series.
std::pair<Rational, Rational> exp_inverse_bounds(int k, int terms = 30);

/// True iff greedy-min, the recursive listing, the successor walk, and the
/// flip-sequence walk all produce the identical listing.  Intended for
/// k^n * n! <= 1e6.
bool check_equivalence(int n, int k);

/// counts[j] = occurrences of flip length j (1-based; counts[0] unused) in
/// the full cyclic flip sequence, closing flip included.
std::vector<std::uint64_t> flip_histogram(int n, int k);

/// Fixed-point decimal rendering of a rational, truncated toward zero.
std::string to_decimal(const Rational& value, int fractional_digits);

}  // namespace flipgray
