#include "flipgray/flip_sequence.hpp"

#include <stdexcept>

namespace flipgray {

FlipSequence sigma_recursive(int n, int k) {
  const std::uint64_t size = listing_size(n, k);

  // Build bottom-up: sigma_1 = (k-1) flips of length 1, and
  // sigma_t = (sigma_{t-1}, t) repeated k*t - 1 times, then sigma_{t-1}.
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(size - 1));
  for (int i = 0; i < k - 1; ++i) seq.push_back(1);
  for (int t = 2; t <= n; ++t) {
    const std::size_t prev_len = seq.size();
    const long long copies = static_cast<long long>(k) * t - 1;
    for (long long c = 0; c < copies; ++c) {
      for (std::size_t i = 0; i < prev_len; ++i) seq.push_back(seq[i]);
      seq.push_back(t);
    }
    // trailing copy without the separator
    for (std::size_t i = 0; i < prev_len; ++i) seq.push_back(seq[i]);
  }
  return FlipSequence{n, k, std::move(seq)};
}

FlipSequenceIterator::FlipSequenceIterator(int n, int k) : n_(n), k_(k) {
  listing_size(n, k);
  // One slot of slack past n+1: the reset branch may touch f_{x+1} on the
  // sentinel step itself (only reachable at n = k = 1).
  counters_.assign(static_cast<std::size_t>(n) + 3, 0);
  flip_values_.resize(static_cast<std::size_t>(n) + 3);
  for (int i = 0; i < static_cast<int>(flip_values_.size()); ++i)
    flip_values_[static_cast<std::size_t>(i)] = i;
}

int FlipSequenceIterator::next() {
  if (terminated_) throw std::logic_error("flip-sequence iterator already terminated");
  int ops = 0;

  int x;
  if (k_ == 1) {
    x = flip_values_[2];
    flip_values_[2] = 2;
  } else {
    x = flip_values_[1];
    flip_values_[1] = 1;
  }
  ops += 3;  // branch on k, read f, restore f

  counters_[static_cast<std::size_t>(x)] += 1;
  ops += 1;

  if (counters_[static_cast<std::size_t>(x)] == k_ * x - 1) {
    counters_[static_cast<std::size_t>(x)] = 0;
    flip_values_[static_cast<std::size_t>(x)] = flip_values_[static_cast<std::size_t>(x) + 1];
    flip_values_[static_cast<std::size_t>(x) + 1] = x + 1;
    ops += 3;
  }
  ops += 1;  // the comparison itself

  if (x > n_) terminated_ = true;
  ops += 1;

  ops_ = ops;
  return x;
}

}  // namespace flipgray
