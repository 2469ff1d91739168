#include "flipgray/coloured_permutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace flipgray {

namespace {

int positive_mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void check_colour_range(const std::vector<ColouredElement>& elements, int k) {
  if (k < 1) throw std::invalid_argument("colour modulus k must be >= 1");
  for (const auto& e : elements) {
    if (e.colour < 0 || e.colour >= k)
      throw std::invalid_argument("colour " + std::to_string(e.colour) +
                                  " out of range 0.." + std::to_string(k - 1));
  }
}

}  // namespace

std::optional<std::uint64_t> listing_size_checked(int n, int k) noexcept {
  if (n < 1 || k < 1) return std::nullopt;
  std::uint64_t size = 1;
  for (int i = 1; i <= n; ++i) {
    if (__builtin_mul_overflow(size, static_cast<std::uint64_t>(i), &size)) return std::nullopt;
    if (__builtin_mul_overflow(size, static_cast<std::uint64_t>(k), &size)) return std::nullopt;
  }
  return size;
}

std::uint64_t listing_size(int n, int k) {
  auto size = listing_size_checked(n, k);
  if (!size)
    throw CapacityError("k^n * n! does not fit 64 bits for n=" + std::to_string(n) +
                        ", k=" + std::to_string(k));
  return *size;
}

PrePerm::PrePerm(std::vector<ColouredElement> elements, int k)
    : elements_(std::move(elements)), k_(k) {
  check_colour_range(elements_, k_);
  std::unordered_set<int> seen;
  for (const auto& e : elements_) {
    if (e.value < 1)
      throw std::invalid_argument("value " + std::to_string(e.value) + " must be >= 1");
    if (!seen.insert(e.value).second)
      throw std::invalid_argument("duplicate value " + std::to_string(e.value));
  }
  if (!elements_.empty() && !listing_size_checked(size(), k_))
    throw CapacityError("pre-perm of length " + std::to_string(size()) + " with k=" +
                        std::to_string(k_) + " exceeds the 64-bit listing-size limit");
}

ColouredPermutation::ColouredPermutation(std::vector<ColouredElement> elements, int k)
    : elements_(std::move(elements)), k_(k) {
  check_colour_range(elements_, k_);
  const int n = static_cast<int>(elements_.size());
  if (n < 1) throw std::invalid_argument("permutation must have at least one element");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& e : elements_) {
    if (e.value < 1 || e.value > n)
      throw std::invalid_argument("value " + std::to_string(e.value) +
                                  " out of range 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(e.value)])
      throw std::invalid_argument("duplicate value " + std::to_string(e.value));
    seen[static_cast<std::size_t>(e.value)] = true;
  }
  listing_size(n, k_);  // reject instances whose listing size overflows
}

ColouredPermutation ColouredPermutation::identity(int n, int k) {
  std::vector<ColouredElement> elements;
  elements.reserve(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) elements.push_back({v, 0});
  return ColouredPermutation(std::move(elements), k);
}

PrePerm ColouredPermutation::prefix() const { return PrePerm(elements_, k_); }

PrePerm ColouredPermutation::prefix(int j) const {
  if (j < 0 || j > n()) throw std::out_of_range("prefix length out of range");
  return PrePerm(std::vector<ColouredElement>(elements_.begin(), elements_.begin() + j), k_);
}

CircularWord::CircularWord(const PrePerm& base) : block_length_(base.size()), k_(base.k()) {
  symbols_.reserve(static_cast<std::size_t>(k_) * static_cast<std::size_t>(block_length_));
  for (int s = k_ - 1; s >= 0; --s) {
    for (const auto& e : base.elements())
      symbols_.push_back({e.value, (e.colour + s) % k_});
  }
}

const ColouredElement& CircularWord::symbol(long long i) const {
  const int m = length();
  return symbols_[static_cast<std::size_t>(positive_mod(i - 1, m))];
}

PrePerm CircularWord::block(int b) const {
  if (b < 0 || b >= k_) throw std::out_of_range("block index out of range");
  const auto first = symbols_.begin() + static_cast<std::ptrdiff_t>(b) * block_length_;
  return PrePerm(std::vector<ColouredElement>(first, first + block_length_), k_);
}

PrePerm CircularWord::window_ending_at(long long end_pos, int len) const {
  std::vector<ColouredElement> window;
  window.reserve(static_cast<std::size_t>(len));
  for (int t = len - 1; t >= 0; --t) window.push_back(symbol(end_pos - t));
  return PrePerm(std::move(window), k_);
}

ColouredPermutation flip(const ColouredPermutation& pi, int len) {
  if (len < 1 || len > pi.n())
    throw std::out_of_range("flip length " + std::to_string(len) + " out of range 1.." +
                            std::to_string(pi.n()));
  std::vector<ColouredElement> out(pi.elements());
  std::reverse(out.begin(), out.begin() + len);
  for (int i = 0; i < len; ++i) out[static_cast<std::size_t>(i)].colour = (out[static_cast<std::size_t>(i)].colour + 1) % pi.k();
  return ColouredPermutation(std::move(out), pi.k());
}

PrePerm shift(const PrePerm& p, int s) {
  std::vector<ColouredElement> out(p.elements());
  const int k = p.k();
  const int r = positive_mod(s, k);
  for (auto& e : out) e.colour = (e.colour + r) % k;
  return PrePerm(std::move(out), k);
}

ColouredPermutation shift(const ColouredPermutation& pi, int s) {
  PrePerm shifted = shift(pi.prefix(), s);
  return ColouredPermutation(shifted.elements(), pi.k());
}

PrePerm reverse(const PrePerm& p) {
  std::vector<ColouredElement> out(p.elements().rbegin(), p.elements().rend());
  return PrePerm(std::move(out), p.k());
}

CircularWord rho(const PrePerm& p) { return CircularWord(p); }

PrePerm rho_sub(const PrePerm& p, int i) {
  const int m = p.k() * p.size();
  if (i < 1 || i > m)
    throw std::out_of_range("rho index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(m));
  return CircularWord(p).window_ending_at(i - 1, p.size() - 1);
}

namespace {

std::string format_elements(const std::vector<ColouredElement>& elements) {
  std::ostringstream out;
  bool first = true;
  for (const auto& e : elements) {
    if (!first) out << ' ';
    out << e.value << '^' << e.colour;
    first = false;
  }
  return out.str();
}

// Decimal with no leading zeros ("0" itself is fine).
bool parse_decimal(std::string_view text, int& out) {
  if (text.empty()) return false;
  if (text.front() < '0' || text.front() > '9') return false;
  if (text.size() > 1 && text.front() == '0') return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

std::string format(const PrePerm& p) { return format_elements(p.elements()); }

std::string format(const ColouredPermutation& pi) { return format_elements(pi.elements()); }

ColouredPermutation parse_permutation(std::string_view text, int k) {
  if (k < 1) throw std::invalid_argument("colour modulus k must be >= 1");
  if (text.empty()) throw ParseError("empty permutation text");

  std::vector<ColouredElement> elements;
  std::size_t pos = 0;
  while (true) {
    const std::size_t space = text.find(' ', pos);
    const std::string_view token =
        text.substr(pos, space == std::string_view::npos ? std::string_view::npos : space - pos);
    const std::string quoted = "'" + std::string(token) + "'";
    const std::size_t caret = token.find('^');
    if (token.empty() || caret == std::string_view::npos)
      throw ParseError("malformed token " + quoted + ": expected value^colour");
    int value = 0;
    int colour = 0;
    if (!parse_decimal(token.substr(0, caret), value) ||
        !parse_decimal(token.substr(caret + 1), colour))
      throw ParseError("malformed token " + quoted + ": expected value^colour");
    if (colour >= k)
      throw ParseError("token " + quoted + ": colour " + std::to_string(colour) +
                       " not below k=" + std::to_string(k));
    if (value < 1) throw ParseError("token " + quoted + ": value must be >= 1");
    elements.push_back({value, colour});
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }

  const int n = static_cast<int>(elements.size());
  std::unordered_set<int> seen;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& e = elements[i];
    const std::string token = std::to_string(e.value) + "^" + std::to_string(e.colour);
    if (e.value > n)
      throw ParseError("token '" + token + "': value " + std::to_string(e.value) +
                       " exceeds the permutation length " + std::to_string(n));
    if (!seen.insert(e.value).second)
      throw ParseError("token '" + token + "': duplicate value " + std::to_string(e.value));
  }
  return ColouredPermutation(std::move(elements), k);
}

}  // namespace flipgray
