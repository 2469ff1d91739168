#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flipgray/errors.hpp"

namespace flipgray {

/// One symbol of a coloured permutation: a value in 1..n carrying a colour
/// in 0..k-1.
struct ColouredElement {
  int value;
  int colour;

  friend bool operator==(const ColouredElement&, const ColouredElement&) = default;
  friend auto operator<=>(const ColouredElement&, const ColouredElement&) = default;
};

/// Number of k-coloured permutations of n values, k^n * n!, if it fits in
/// 64 bits.
std::optional<std::uint64_t> listing_size_checked(int n, int k) noexcept;

/// As listing_size_checked, but throws CapacityError on overflow.
std::uint64_t listing_size(int n, int k);

/// A prefix of some coloured permutation: distinct positive values, each with
/// a colour in 0..k-1.  May be empty.  Immutable after construction.
class PrePerm {
 public:
  PrePerm(std::vector<ColouredElement> elements, int k);

  int k() const noexcept { return k_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  bool empty() const noexcept { return elements_.empty(); }
  const ColouredElement& operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<ColouredElement>& elements() const noexcept { return elements_; }

  friend bool operator==(const PrePerm&, const PrePerm&) = default;

 private:
  std::vector<ColouredElement> elements_;
  int k_;
};

/// A full coloured permutation: values are exactly {1..n}, colours in 0..k-1.
/// Construction rejects (n, k) whose listing size overflows 64 bits.
class ColouredPermutation {
 public:
  ColouredPermutation(std::vector<ColouredElement> elements, int k);

  /// 1^0 2^0 ... n^0, the canonical start of every listing.
  static ColouredPermutation identity(int n, int k);

  int n() const noexcept { return static_cast<int>(elements_.size()); }
  int k() const noexcept { return k_; }
  const ColouredElement& operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<ColouredElement>& elements() const noexcept { return elements_; }

  /// The whole permutation viewed as a pre-perm.
  PrePerm prefix() const;
  /// The first j elements as a pre-perm.
  PrePerm prefix(int j) const;

  friend bool operator==(const ColouredPermutation&, const ColouredPermutation&) = default;

 private:
  std::vector<ColouredElement> elements_;
  int k_;
};

/// The circular word of length m = k*j made of the k colour-shifted copies of
/// a pre-perm, shifts decreasing from k-1 down to 0.
class CircularWord {
 public:
  explicit CircularWord(const PrePerm& base);

  int length() const noexcept { return static_cast<int>(symbols_.size()); }
  int block_length() const noexcept { return block_length_; }
  int k() const noexcept { return k_; }
  const std::vector<ColouredElement>& symbols() const noexcept { return symbols_; }

  /// 1-based circular access: any integer index is reduced modulo the length,
  /// so symbol(0) == symbol(m) and symbol(m+1) == symbol(1).
  const ColouredElement& symbol(long long i) const;

  /// Block b (0-indexed from the front) as a pre-perm; equals the base
  /// shifted by +(k-1-b).
  PrePerm block(int b) const;

  /// The window of `len` consecutive symbols ending at circular position
  /// `end_pos` (1-based).
  PrePerm window_ending_at(long long end_pos, int len) const;

 private:
  std::vector<ColouredElement> symbols_;
  int block_length_;
  int k_;
};

/// Prefix-reversal of length `len` that also increments the colour of every
/// flipped element by 1 mod k.  Throws std::out_of_range unless 1 <= len <= n.
ColouredPermutation flip(const ColouredPermutation& pi, int len);

/// All colours incremented by s mod k; order untouched.
PrePerm shift(const PrePerm& p, int s);
ColouredPermutation shift(const ColouredPermutation& pi, int s);

/// Order reversed, colours untouched.  Not the same as a flip when k > 1.
PrePerm reverse(const PrePerm& p);

CircularWord rho(const PrePerm& p);

/// The length j-1 subword of rho(p) ending at circular position i-1,
/// 1 <= i <= k*j.  Empty when j == 1.
PrePerm rho_sub(const PrePerm& p, int i);

/// Canonical text: tokens v^c separated by single spaces, decimal, no
/// leading zeros, e.g. "5^1 6^2 1^0 7^1 3^1 4^1 2^1".
std::string format(const PrePerm& p);
std::string format(const ColouredPermutation& pi);

/// Inverse of format.  Throws ParseError naming the offending token.
ColouredPermutation parse_permutation(std::string_view text, int k);

}  // namespace flipgray
