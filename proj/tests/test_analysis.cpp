#include "doctest.h"

#include <condition_variable>
#include <deque>
#include <mutex>
#include <thread>

#include "flipgray/analysis.hpp"
#include "flipgray/flip_sequence.hpp"
#include "test_util.hpp"

using namespace flipgray;
using testutil::perm;

TEST_CASE("the canonical listing verifies as a Hamilton cycle") {
  const auto outcome = greedy(3, 3, GreedyPriority::MinFlip);
  const VerificationReport report = verify_listing(outcome.listing, 3, 3);
  CHECK(report.total_visited == 162);
  CHECK(report.expected == 162);
  CHECK(report.duplicates == 0);
  CHECK(report.bad_transitions.empty());
  CHECK(report.cyclic_closure);
  CHECK(report.is_hamilton_cycle);
  REQUIRE(report.closing_flip_length.has_value());
  CHECK(*report.closing_flip_length == 3);
}

TEST_CASE("corrupted listings are caught") {
  auto listing = generate_by_flipseq(3, 2);

  SUBCASE("replacing an entry") {
    listing[10] = listing[20];
    const auto report = verify_listing(listing, 3, 2);
    CHECK(report.duplicates > 0);
    CHECK(!report.is_hamilton_cycle);
  }

  SUBCASE("swapping two adjacent entries") {
    std::swap(listing[5], listing[6]);
    const auto report = verify_listing(listing, 3, 2);
    CHECK(!report.bad_transitions.empty());
    CHECK(!report.is_hamilton_cycle);
  }

  SUBCASE("dropping the tail") {
    listing.pop_back();
    const auto report = verify_listing(listing, 3, 2);
    CHECK(report.total_visited == report.expected - 1);
    CHECK(!report.is_hamilton_cycle);
  }

  SUBCASE("an entry with the wrong shape is rejected") {
    ListingVerifier verifier(3, 2);
    CHECK_THROWS_AS(verifier.consume(perm("1^0 2^0", 2)), std::invalid_argument);
  }
}

TEST_CASE("the stuck max-flip path is not a Hamilton cycle") {
  const auto outcome = greedy(2, 3, GreedyPriority::MaxFlip);
  const auto report = verify_listing(outcome.listing, 2, 3);
  CHECK(report.total_visited == 12);
  CHECK(report.expected == 18);
  CHECK(report.duplicates == 0);
  CHECK(report.bad_transitions.empty());
  CHECK(!report.is_hamilton_cycle);
}

TEST_CASE("report text is line oriented") {
  const auto report = verify_listing(generate_by_flipseq(2, 2), 2, 2);
  CHECK(report.to_text() ==
        "total:8\nexpected:8\nduplicates:0\nbad_transitions:0\ncyclic:true\nhamilton:true\n");
}

TEST_CASE("verification consumes a stream produced on another thread") {
  // Bounded producer/consumer handoff: the producer blocks while the queue
  // is full, so it never runs unboundedly ahead of the verifier.
  std::mutex mutex;
  std::condition_variable room;
  std::condition_variable ready;
  std::deque<ColouredPermutation> queue;
  bool done = false;
  constexpr std::size_t kCapacity = 16;

  ListingVerifier verifier(4, 2);
  std::thread producer([&] {
    stream_by_flipseq(ColouredPermutation::identity(4, 2), [&](const ColouredPermutation& pi) {
      std::unique_lock lock(mutex);
      room.wait(lock, [&] { return queue.size() < kCapacity; });
      queue.push_back(pi);
      ready.notify_one();
    });
    std::unique_lock lock(mutex);
    done = true;
    ready.notify_one();
  });

  std::uint64_t consumed = 0;
  while (true) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return !queue.empty() || done; });
    if (queue.empty()) break;
    const ColouredPermutation pi = queue.front();
    queue.pop_front();
    room.notify_one();
    lock.unlock();
    verifier.consume(pi);
    ++consumed;
  }
  producer.join();

  const auto report = verifier.finish();
  CHECK(consumed == 384);
  CHECK(report.is_hamilton_cycle);
}

TEST_CASE("average flip length closed form") {
  for (int k = 1; k <= 6; ++k) CHECK(avg_flip_length(1, k).exact_average == 1);
  CHECK(avg_flip_length(2, 2).exact_average == Rational(3, 2));
  CHECK(avg_flip_length(2, 2).empirical_average == Rational(12, 8));
  CHECK(avg_flip_length(3, 3).exact_average == Rational(25, 18));

  SUBCASE("growth step is exactly 1/(n! k^n)") {
    for (int k = 1; k <= 4; ++k) {
      Rational step_denominator = 1;  // n! * k^n
      for (int n = 1; n <= 7; ++n) {
        step_denominator *= n * k;
        const Rational diff =
            avg_flip_length(n + 1, k).exact_average - avg_flip_length(n, k).exact_average;
        CHECK(diff == 1 / step_denominator);
      }
    }
  }

  SUBCASE("exact and empirical averages agree as rationals") {
    for (int n = 1; n <= 6; ++n) {
      for (int k = 1; k <= 4; ++k) {
        if (listing_size(n, k) > 100000) continue;
        const FlipStats stats = avg_flip_length(n, k);
        REQUIRE(stats.empirical_average.has_value());
        CHECK(stats.exact_average == *stats.empirical_average);
      }
    }
  }

  SUBCASE("the empirical pass is skipped above the limit") {
    CHECK(!avg_flip_length(9, 1, 100).empirical_average.has_value());
  }
}

TEST_CASE("averages stay below the certified root-of-e bound") {
  for (int k = 1; k <= 8; ++k) {
    const auto [lo, hi] = exp_inverse_bounds(k);
    CHECK(lo < hi);
    CHECK(hi - lo < Rational(1, 1000000000000LL));  // enclosure width under 1e-12
    for (int n = 1; n <= 9; ++n) {
      if (!listing_size_checked(n, k)) continue;
      const FlipStats stats = avg_flip_length(n, k, 0);
      CHECK(stats.below_bound());
    }
  }

  SUBCASE("bound decimals match known digits") {
    const auto [e_lo, e_hi] = exp_inverse_bounds(1);
    CHECK(to_decimal(e_lo, 15) == "2.718281828459045");
    CHECK(to_decimal(e_hi, 15) == "2.718281828459045");
    const auto [sqrt_lo, sqrt_hi] = exp_inverse_bounds(2);
    CHECK(to_decimal(sqrt_lo, 16) == "1.6487212707001281");
    CHECK(to_decimal(sqrt_hi, 16) == "1.6487212707001281");
  }

  SUBCASE("ten pancakes average under e") {
    const FlipStats stats = avg_flip_length(10, 1, 0);
    CHECK(stats.exact_average < Rational(27182819, 10000000));
  }
}

TEST_CASE("flip length histogram matches the recursive expansion") {
  for (const auto [n, k] : {std::pair{3, 3}, std::pair{4, 2}, std::pair{5, 1}, std::pair{2, 6}}) {
    const auto counts = flip_histogram(n, k);
    const auto sigma = sigma_recursive(n, k);
    std::vector<std::uint64_t> expected(static_cast<std::size_t>(n) + 1, 0);
    for (int len : sigma.lengths) ++expected[static_cast<std::size_t>(len)];
    ++expected[static_cast<std::size_t>(n)];
    CHECK(counts == expected);

    // Closed form: length j < n occurs (k^n n!/(k^j j!)) (kj - 1) times,
    // and length n occurs kn times (closing flip included).
    const std::uint64_t total = listing_size(n, k);
    for (int j = 1; j < n; ++j) {
      std::uint64_t kj_fact = 1;  // k^j * j!
      for (int t = 1; t <= j; ++t) kj_fact *= static_cast<std::uint64_t>(k) * t;
      CHECK(counts[static_cast<std::size_t>(j)] ==
            total / kj_fact * (static_cast<std::uint64_t>(k) * j - 1));
    }
    CHECK(counts[static_cast<std::size_t>(n)] ==
          static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n));
  }
}

TEST_CASE("equivalence check over the four constructions") {
  CHECK(check_equivalence(3, 3));
  CHECK(check_equivalence(4, 2));
  CHECK(check_equivalence(1, 1));
}
