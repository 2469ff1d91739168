#include "flipgray/generation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "flipgray/flip_sequence.hpp"

namespace flipgray {

namespace {

// In-place flip on a raw element buffer; callers guarantee 1 <= len <= size.
void flip_in_place(std::vector<ColouredElement>& elems, int len, int k) {
  std::reverse(elems.begin(), elems.begin() + len);
  for (int i = 0; i < len; ++i) {
    auto& e = elems[static_cast<std::size_t>(i)];
    e.colour = (e.colour + 1) % k;
  }
}

std::uint64_t pack_elements(const std::vector<ColouredElement>& elems, int k) {
  const std::uint64_t radix =
      static_cast<std::uint64_t>(elems.size()) * static_cast<std::uint64_t>(k);
  std::uint64_t key = 0;
  for (const auto& e : elems) {
    const std::uint64_t digit =
        static_cast<std::uint64_t>(e.value - 1) * static_cast<std::uint64_t>(k) +
        static_cast<std::uint64_t>(e.colour);
    if (__builtin_mul_overflow(key, radix, &key) || __builtin_add_overflow(key, digit, &key))
      throw CapacityError("permutation key space exceeds 64 bits");
    }
  return key;
}

}  // namespace

std::uint64_t pack_key(const ColouredPermutation& pi) {
  return pack_elements(pi.elements(), pi.k());
}

GreedyOutcome greedy(int n, int k, GreedyPriority priority, std::uint64_t memory_budget) {
  const std::uint64_t expected = listing_size(n, k);
  if (expected > memory_budget)
    throw CapacityError("greedy visited set of " + std::to_string(expected) +
                        " permutations exceeds the memory budget of " +
                        std::to_string(memory_budget));

  GreedyOutcome outcome;
  outcome.listing.reserve(static_cast<std::size_t>(expected));
  std::unordered_set<std::uint64_t> visited;
  visited.reserve(static_cast<std::size_t>(expected));

  ColouredPermutation current = ColouredPermutation::identity(n, k);
  visited.insert(pack_key(current));
  outcome.listing.push_back(current);

  const bool min_first = priority == GreedyPriority::MinFlip;
  while (true) {
    bool extended = false;
    for (int step = 0; step < n; ++step) {
      const int len = min_first ? step + 1 : n - step;
      ColouredPermutation candidate = flip(current, len);
      if (visited.insert(pack_key(candidate)).second) {
        current = std::move(candidate);
        outcome.listing.push_back(current);
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }

  outcome.exhaustive = outcome.listing.size() == expected;
  outcome.cyclic = false;
  for (int len = 1; len <= n; ++len) {
    if (flip(outcome.listing.back(), len) == outcome.listing.front()) {
      outcome.cyclic = true;
      break;
    }
  }
  return outcome;
}

namespace {

void rec_listing_into(const PrePerm& p, std::vector<PrePerm>& out) {
  const int j = p.size();
  if (j == 1) {
    for (int s = 0; s < p.k(); ++s) out.push_back(shift(p, s));
    return;
  }
  const CircularWord word = rho(p);
  for (int i = word.length(); i >= 1; --i) {
    const ColouredElement tail = word.symbol(i);
    const std::size_t first_new = out.size();
    rec_listing_into(word.window_ending_at(i - 1, j - 1), out);
    for (std::size_t t = first_new; t < out.size(); ++t) {
      std::vector<ColouredElement> extended = out[t].elements();
      extended.push_back(tail);
      out[t] = PrePerm(std::move(extended), p.k());
    }
  }
}

}  // namespace

std::vector<PrePerm> rec_listing(const PrePerm& p) {
  if (p.empty()) throw std::invalid_argument("rec_listing needs a non-empty pre-perm");
  std::vector<PrePerm> out;
  out.reserve(static_cast<std::size_t>(listing_size(p.size(), p.k())));
  rec_listing_into(p, out);
  return out;
}

std::vector<ColouredPermutation> rec_listing(const ColouredPermutation& pi) {
  std::vector<PrePerm> raw = rec_listing(pi.prefix());
  std::vector<ColouredPermutation> out;
  out.reserve(raw.size());
  for (auto& p : raw) out.emplace_back(p.elements(), pi.k());
  return out;
}

int successor(const ColouredPermutation& pi) {
  const int n = pi.n();
  const int k = pi.k();
  const auto& e = pi.elements();
  int increases = 0;
  for (int j = 0; j + 1 < n; ++j) {
    const auto& a = e[static_cast<std::size_t>(j)];
    const auto& b = e[static_cast<std::size_t>(j) + 1];
    if (a.value < b.value) ++increases;
    if (increases == 2 || (increases == 1 && b.value < e[0].value)) return j + 1;
    if (k > 1 && a.value < b.value && (b.colour - a.colour + k) % k != 1) return j + 1;
    if (k > 1 && a.value > b.value && a.colour != b.colour) return j + 1;
  }
  return n;
}

std::vector<ColouredPermutation> generate_by_successor(int n, int k) {
  const std::uint64_t expected = listing_size(n, k);
  std::vector<ColouredPermutation> out;
  out.reserve(static_cast<std::size_t>(expected));
  const ColouredPermutation start = ColouredPermutation::identity(n, k);
  ColouredPermutation current = start;
  for (std::uint64_t i = 0; i <= expected; ++i) {
    out.push_back(current);
    current = flip(current, successor(current));
    if (current == start) return out;
  }
  throw std::logic_error("successor walk failed to return to the start");
}

void stream_by_flipseq(const ColouredPermutation& start,
                       const std::function<void(const ColouredPermutation&)>& visit,
                       const std::function<void(int)>& on_cycle_close) {
  const int n = start.n();
  const int k = start.k();
  FlipSequenceIterator seq(n, k);
  std::vector<ColouredElement> elems = start.elements();
  visit(start);
  while (true) {
    const int x = seq.next();
    if (x > n) break;
    flip_in_place(elems, x, k);
    visit(ColouredPermutation(elems, k));
  }
  if (on_cycle_close) on_cycle_close(n);
}

std::vector<ColouredPermutation> generate_by_flipseq(const ColouredPermutation& start) {
  std::vector<ColouredPermutation> out;
  out.reserve(static_cast<std::size_t>(listing_size(start.n(), start.k())));
  stream_by_flipseq(start, [&out](const ColouredPermutation& pi) { out.push_back(pi); });
  return out;
}

std::vector<ColouredPermutation> generate_by_flipseq(int n, int k) {
  return generate_by_flipseq(ColouredPermutation::identity(n, k));
}

}  // namespace flipgray
