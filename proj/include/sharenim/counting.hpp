#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sharenim/bitops.hpp"
#include "sharenim/game.hpp"

namespace sharenim {

/// Exact non-negative count. Overflow is detected and thrown, never wrapped.
using CountResult = std::uint64_t;

inline CountResult checked_add(CountResult a, CountResult b) {
  CountResult r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count overflow in addition");
  return r;
}

inline CountResult checked_mul(CountResult a, CountResult b) {
  CountResult r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count overflow in multiplication");
  return r;
}

inline CountResult checked_pow(CountResult base, unsigned exp) {
  CountResult r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

/// Number of unordered pairs of positive integers {a, b} with a + b = S and
/// a XOR b = X.
///
/// Since a + b = (a XOR b) + 2 * (a AND b), a solution needs c = (S - X) / 2
/// to be a non-negative integer whose bits avoid X; each set bit of X then
/// splits two ways between a and b, giving 2^(popcount(X) - 1) unordered pairs.
/// When S = X the split that zeroes one side is excluded, and when X = 0 the
/// only candidate is the diagonal pair {S/2, S/2}.
inline CountResult pair_count(BitValue S, BitValue X) {
  check_width(S);
  check_width(X);
  if (S < X) return 0;
  if ((S - X) & 1) return 0;
  const BitValue carry_bits = (S - X) / 2;  // a AND b
  if (carry_bits & X) return 0;
  if (X == 0) return S >= 2 ? 1 : 0;
  const CountResult split = CountResult{1} << (std::popcount(X) - 1);
  return S == X ? split - 1 : split;
}

/// 3-pile zero-nim positions with one pile fixed at X and the other two
/// positive piles summing to S. The other two piles must XOR to X, so this
/// is pair_count(S, X).
inline CountResult zero_nim_count_fixed(BitValue S, BitValue X) {
  if (X == 0) throw std::domain_error("fixed pile must be positive");
  return pair_count(S, X);
}

/// Unordered triples of positive integers {a, b, c} with a + b + c = S and
/// zero XOR. Iterates the fixed pile from 1 to S - 3 (the two remaining
/// positive piles XORing to it sum to at least 3); every triple is counted
/// once per choice of fixed pile, and zero XOR forces all three piles
/// distinct, so the division by 3 is exact.
inline CountResult zero_nim_count_by_sum(BitValue S) {
  check_width(S);
  CountResult total = 0;
  for (BitValue x = 1; x + 3 <= S; ++x) {
    total = checked_add(total, pair_count(S - x, x));
  }
  if (total % 3 != 0) {
    throw std::logic_error("zero_nim_count_by_sum: ordered total " + std::to_string(total) +
                           " for S=" + std::to_string(S) + " is not divisible by 3");
  }
  return total / 3;
}

/// Zero-nim triples with total at most K (the smallest such triple sums to 6).
inline CountResult zero_nim_count_upto(BitValue K) {
  check_width(K);
  CountResult total = 0;
  for (BitValue s = 3; s <= K; ++s) {
    total = checked_add(total, zero_nim_count_by_sum(s));
  }
  return total;
}

/// Unordered positions {a, b, a+b} with 1 <= a < b, carry-free (a AND b = 0,
/// equivalently zero nim-sum), whose two larger piles have exactly k binary
/// digits: b supplies bit k-1, and each of the k-1 lower digit places is one
/// of (a=0,b=0), (a=0,b=1), (a=1,b=0), minus the 2^(k-1) choices with a = 0.
inline CountResult absum_count_exact_digits(unsigned k) {
  if (k < 1) throw std::domain_error("digit count must be at least 1");
  return checked_pow(3, k - 1) - checked_pow(2, k - 1);
}

/// Cumulative form of the above: all piles at most k digits.
/// Equals (3^k + 1) / 2 - 2^k, the prefix sum of the exact-digit counts.
inline CountResult absum_count_upto_digits(unsigned k) {
  if (k < 1) throw std::domain_error("digit count must be at least 1");
  const CountResult half = checked_add(checked_pow(3, k), 1) / 2;
  return half - checked_pow(2, k);
}

/// Bit positions holding 1 in the smaller of the two piles and 0 in the
/// larger. Equal piles have identical expansions, hence none.
inline CountResult transferable_pair_count(BitValue a, BitValue b) {
  check_width(a);
  check_width(b);
  const BitValue lo = a < b ? a : b;
  const BitValue hi = a < b ? b : a;
  return static_cast<CountResult>(std::popcount(lo & ~hi));
}

/// Number of submasks of D whose value is strictly below V, for V a submask
/// of D: compress V's bits onto D's bit positions and read the result as a
/// binary number (submasks of D are ordered exactly like their compressions).
inline CountResult submask_rank(BitValue V, BitValue D) {
  CountResult rank = 0;
  CountResult out_bit = 1;
  for (BitValue d = D; d != 0; d &= d - 1) {
    if (V & (d & -d)) rank |= out_bit;
    out_bit <<= 1;
  }
  return rank;
}

/// Legal moves from a zero-nim 3-pile position whose result is again
/// zero-nim. Removals change a single pile and never qualify, so only
/// transfers count. A transfer between piles x <= y lands on zero nim-sum
/// exactly when it re-partitions the bits of D = x XOR y between the two
/// piles (the AND part is pinned by the preserved sum), i.e. one move per
/// submask of D strictly below x's share of D. That is submask_rank(x & ~y,
/// x XOR y) per pair; carrying transfers such as (2,5,7) -> (1,6,7) are
/// included, not just single-bit shifts.
inline CountResult zero_nim_follower_count(const Position& p) {
  if (p.size() != 3) throw std::invalid_argument("expected a 3-pile position");
  if (nim_sum(p) != 0) throw std::domain_error("position is not zero-nim");
  CountResult total = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const Pile lo = p[i] < p[j] ? p[i] : p[j];
      const Pile hi = p[i] < p[j] ? p[j] : p[i];
      total = checked_add(total, submask_rank(lo & ~hi, lo ^ hi));
    }
  }
  return total;
}

/// All zero-nim triples of a fixed sum are linked by single transfers into
/// one sequence, so its length is the zero-nim count for that sum.
inline CountResult transferable_sequence_size(BitValue S) {
  return zero_nim_count_by_sum(S);
}

}  // namespace sharenim
