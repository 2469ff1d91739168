#include "flipgray/ranking.hpp"

#include <vector>

namespace flipgray {

namespace {

// factorial[t] * k^t for t = 0..n-1; all products fit because k^n * n! does.
std::vector<std::uint64_t> sublist_sizes(int n, int k) {
  std::vector<std::uint64_t> sizes(static_cast<std::size_t>(n));
  sizes[0] = 1;
  for (int t = 1; t < n; ++t)
    sizes[static_cast<std::size_t>(t)] = sizes[static_cast<std::size_t>(t) - 1] *
                                         static_cast<std::uint64_t>(t) *
                                         static_cast<std::uint64_t>(k);
  return sizes;
}

}  // namespace

std::uint64_t rank(const ColouredPermutation& pi) {
  const int n = pi.n();
  const int k = pi.k();
  const std::vector<std::uint64_t> sizes = sublist_sizes(n, k);

  // 1-based working copies, relabelled in place level by level.
  std::vector<int> value(static_cast<std::size_t>(n) + 1);
  std::vector<int> colour(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    value[static_cast<std::size_t>(i)] = pi[i - 1].value;
    colour[static_cast<std::size_t>(i)] = pi[i - 1].colour;
  }

  std::uint64_t result = 0;
  for (int t = n; t >= 2; --t) {
    const int vt = value[static_cast<std::size_t>(t)];
    const int ct = colour[static_cast<std::size_t>(t)];
    result += (static_cast<std::uint64_t>(ct + 1) * static_cast<std::uint64_t>(t) -
               static_cast<std::uint64_t>(vt)) *
              sizes[static_cast<std::size_t>(t) - 1];
    // Map the first t-1 symbols onto a permutation of 1..t-1 so the
    // recursion sees the sublist renumbered from its own canonical start.
    for (int j = 1; j < t; ++j) {
      if (value[static_cast<std::size_t>(j)] < vt)
        colour[static_cast<std::size_t>(j)] = (colour[static_cast<std::size_t>(j)] - ct + k) % k;
      else
        colour[static_cast<std::size_t>(j)] =
            (colour[static_cast<std::size_t>(j)] - ct - 1 + k) % k;
      value[static_cast<std::size_t>(j)] = (value[static_cast<std::size_t>(j)] - vt + t) % t;
    }
  }
  return result + static_cast<std::uint64_t>(colour[1]) + 1;
}

ColouredPermutation unrank(std::uint64_t r, int n, int k) {
  const std::uint64_t total = listing_size(n, k);
  if (r < 1 || r > total)
    throw std::out_of_range("rank " + std::to_string(r) + " out of range 1.." +
                            std::to_string(total));
  const std::vector<std::uint64_t> sizes = sublist_sizes(n, k);

  std::vector<int> value(static_cast<std::size_t>(n) + 1);
  std::vector<int> colour(static_cast<std::size_t>(n) + 1);
  for (int t = n; t >= 2; --t) {
    const std::uint64_t sublist = sizes[static_cast<std::size_t>(t) - 1];
    const std::uint64_t x = (r - 1) / sublist;  // 0 .. k*t - 1
    r -= x * sublist;
    value[static_cast<std::size_t>(t)] = t - static_cast<int>(x % static_cast<std::uint64_t>(t));
    colour[static_cast<std::size_t>(t)] = static_cast<int>(x / static_cast<std::uint64_t>(t));
  }
  value[1] = 1;
  colour[1] = static_cast<int>(r - 1);

  // Undo the relabelling from the inside out.
  for (int t = 2; t <= n; ++t) {
    const int vt = value[static_cast<std::size_t>(t)];
    const int ct = colour[static_cast<std::size_t>(t)];
    for (int j = 1; j < t; ++j) {
      value[static_cast<std::size_t>(j)] =
          1 + (value[static_cast<std::size_t>(j)] + vt - 1) % t;
      if (value[static_cast<std::size_t>(j)] < vt)
        colour[static_cast<std::size_t>(j)] = (colour[static_cast<std::size_t>(j)] + ct) % k;
      else
        colour[static_cast<std::size_t>(j)] = (colour[static_cast<std::size_t>(j)] + ct + 1) % k;
    }
  }

  std::vector<ColouredElement> elements;
  elements.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    elements.push_back({value[static_cast<std::size_t>(i)], colour[static_cast<std::size_t>(i)]});
  return ColouredPermutation(std::move(elements), k);
}

}  // namespace flipgray
