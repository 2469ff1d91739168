#pragma once

#include <stdexcept>
#include <string>

namespace flipgray {

/// Malformed permutation text (bad token, duplicate value, colour out of range).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested (n, k) instance exceeds the 64-bit listing-size limit or a
/// configured memory budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flipgray
