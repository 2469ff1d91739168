#include "flipgray/analysis.hpp"

#include <sstream>

#include "flipgray/flip_sequence.hpp"

namespace flipgray {

namespace mp = boost::multiprecision;

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "total:" << total_visited << '\n'
      << "expected:" << expected << '\n'
      << "duplicates:" << duplicates << '\n'
      << "bad_transitions:" << bad_transitions.size() << '\n'
      << "cyclic:" << (cyclic_closure ? "true" : "false") << '\n'
      << "hamilton:" << (is_hamilton_cycle ? "true" : "false") << '\n';
  return out.str();
}

namespace {

// Recovers the flip length of the transition from -> to, if any: a flip of
// length j changes position j and nothing later, so the last differing
// position is the only candidate.  Equal entries are only reachable via a
// length-1 flip when k = 1.
std::optional<int> recover_flip(const ColouredPermutation& from, const ColouredPermutation& to) {
  int candidate = 1;
  for (int i = from.n(); i >= 1; --i) {
    if (from[i - 1] != to[i - 1]) {
      candidate = i;
      break;
    }
  }
  if (flip(from, candidate) == to) return candidate;
  return std::nullopt;
}

}  // namespace

ListingVerifier::ListingVerifier(int n, int k, std::uint64_t memory_budget)
    : n_(n), k_(k), expected_(listing_size(n, k)) {
  if (expected_ > memory_budget)
    throw CapacityError("verifying " + std::to_string(expected_) +
                        " permutations exceeds the memory budget of " +
                        std::to_string(memory_budget));
  visited_.reserve(static_cast<std::size_t>(expected_));
  report_.expected = expected_;
}

void ListingVerifier::consume(const ColouredPermutation& pi) {
  if (pi.n() != n_ || pi.k() != k_)
    throw std::invalid_argument("listing entry has mismatched n or k");
  ++report_.total_visited;
  if (!visited_.insert(pack_key(pi)).second) ++report_.duplicates;
  if (previous_) {
    if (!recover_flip(*previous_, pi))
      report_.bad_transitions.push_back(
          {report_.total_visited, "no single flip maps the previous entry to this one"});
  } else {
    first_ = pi;
  }
  previous_ = pi;
}

VerificationReport ListingVerifier::finish() {
  if (first_ && previous_) {
    if (auto closing = recover_flip(*previous_, *first_)) {
      report_.cyclic_closure = true;
      report_.closing_flip_length = closing;
    }
  }
  report_.is_hamilton_cycle = report_.total_visited == expected_ && report_.duplicates == 0 &&
                              report_.bad_transitions.empty() && report_.cyclic_closure;
  return report_;
}

VerificationReport verify_listing(const std::vector<ColouredPermutation>& listing, int n, int k) {
  ListingVerifier verifier(n, k);
  for (const auto& pi : listing) verifier.consume(pi);
  return verifier.finish();
}

std::pair<Rational, Rational> exp_inverse_bounds(int k, int terms) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Rational lower = 0;
  mp::cpp_int denominator = 1;  // k^j * j!
  for (int j = 0; j <= terms; ++j) {
    if (j > 0) denominator *= k * j;
    lower += Rational(1, denominator);
  }
  // Tail after the last term is below twice its first omitted summand.
  const Rational upper = lower + Rational(2, denominator * (k * (terms + 1)));
  return {lower, upper};
}

FlipStats avg_flip_length(int n, int k, std::uint64_t empirical_limit) {
  const std::uint64_t size = listing_size(n, k);
  FlipStats stats;
  stats.n = n;
  stats.k = k;

  mp::cpp_int denominator = 1;  // k^j * j!
  for (int j = 0; j < n; ++j) {
    if (j > 0) denominator *= k * j;
    stats.exact_average += Rational(1, denominator);
  }

  auto [lo, hi] = exp_inverse_bounds(k);
  stats.bound_lower = std::move(lo);
  stats.bound_upper = std::move(hi);

  if (size <= empirical_limit) {
    FlipSequenceIterator seq(n, k);
    std::uint64_t sum = 0;
    while (true) {
      const int x = seq.next();
      if (x > n) break;
      sum += static_cast<std::uint64_t>(x);
    }
    sum += static_cast<std::uint64_t>(n);  // closing flip
    stats.empirical_average = Rational(sum, size);
  }
  return stats;
}

bool check_equivalence(int n, int k) {
  const std::vector<ColouredPermutation> by_flipseq = generate_by_flipseq(n, k);
  if (greedy(n, k, GreedyPriority::MinFlip, 1'000'000).listing != by_flipseq) return false;
  if (rec_listing(ColouredPermutation::identity(n, k)) != by_flipseq) return false;
  return generate_by_successor(n, k) == by_flipseq;
}

std::vector<std::uint64_t> flip_histogram(int n, int k) {
  listing_size(n, k);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  FlipSequenceIterator seq(n, k);
  while (true) {
    const int x = seq.next();
    if (x > n) break;
    ++counts[static_cast<std::size_t>(x)];
  }
  ++counts[static_cast<std::size_t>(n)];  // closing flip
  return counts;
}

std::string to_decimal(const Rational& value, int fractional_digits) {
  if (fractional_digits < 1) throw std::invalid_argument("need at least one fractional digit");
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  mp::cpp_int scale = 1;
  for (int i = 0; i < fractional_digits; ++i) scale *= 10;
  const mp::cpp_int scaled =
      mp::numerator(magnitude) * scale / mp::denominator(magnitude);
  const mp::cpp_int whole = scaled / scale;
  const mp::cpp_int remainder = scaled % scale;
  std::string fraction = remainder.str();
  fraction.insert(0, static_cast<std::size_t>(fractional_digits) - fraction.size(), '0');
  return (negative ? "-" : "") + whole.str() + "." + fraction;
}

}  // namespace flipgray
