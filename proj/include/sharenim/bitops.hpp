#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sharenim {

/// Non-negative integer carried by every bit-level operation in the library.
using BitValue = std::uint64_t;

/// Usable value width. Everything up to and including 2^62 is accepted;
/// larger inputs are rejected so that sums of two values never wrap.
inline constexpr int kValueBits = 62;
inline constexpr BitValue kMaxValue = BitValue{1} << kValueBits;

inline void check_width(BitValue v) {
  if (v > kMaxValue) {
    throw std::range_error("value " + std::to_string(v) + " exceeds the supported " +
                           std::to_string(kValueBits) + "-bit width");
  }
}

/// XOR fold of all elements; the empty sequence folds to 0.
inline BitValue nim_sum(std::span<const BitValue> values) {
  BitValue acc = 0;
  for (BitValue v : values) {
    check_width(v);
    acc ^= v;
  }
  return acc;
}

inline BitValue nim_sum(const std::vector<BitValue>& values) {
  return nim_sum(std::span<const BitValue>(values));
}

inline int popcount(BitValue n) {
  check_width(n);
  return std::popcount(n);
}

/// Population count by the recurrence n mod 2 + f(floor(n/2)).
inline int popcount_recursive(BitValue n) {
  check_width(n);
  if (n == 0) return 0;
  if (n == 1) return 1;
  return static_cast<int>(n % 2) + popcount_recursive(n / 2);
}

/// Population count as sum over i of floor(n / 2^i) mod 2. The sum is
/// truncated at the bit length of n; all higher terms vanish.
inline int popcount_floor_sum(BitValue n) {
  check_width(n);
  int count = 0;
  for (int i = 0; (n >> i) != 0 && i <= kValueBits; ++i) {
    count += static_cast<int>((n >> i) & 1);
  }
  return count;
}

/// Smallest non-negative integer absent from the set of values.
/// Duplicates and unsorted input are fine.
inline BitValue mex(std::span<const BitValue> values) {
  const std::size_t n = values.size();
  std::vector<bool> seen(n + 1, false);
  for (BitValue v : values) {
    if (v <= n) seen[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (!seen[i]) return i;
  }
  return n + 1;  // unreachable: n+1 slots cannot all be filled by n values
}

inline BitValue mex(const std::vector<BitValue>& values) {
  return mex(std::span<const BitValue>(values));
}

/// Number of binary digits of n; 0 has zero digits.
inline int bit_length(BitValue n) {
  check_width(n);
  return std::bit_width(n);
}

}  // namespace sharenim
