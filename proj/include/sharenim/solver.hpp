#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sharenim/bitops.hpp"
#include "sharenim/game.hpp"

namespace sharenim {

enum class Outcome { P, N };

inline char outcome_letter(Outcome o) { return o == Outcome::P ? 'P' : 'N'; }

struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Outcome plus the rule that decided it: "nim-sum", "a-a-b", "a-b-a+b",
/// "1-a-b" or "search".
struct Classification {
  Outcome outcome;
  std::string rule;
};

struct PositionHash {
  std::size_t operator()(const Position& p) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (Pile x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Classic Nim winning move: with S the nim-sum, pick the first pile whose
/// most significant bit matches S's and reduce it to pile XOR S. Nullopt
/// when the nim-sum is already zero.
inline std::optional<Move> nim_winning_move(const Position& piles) {
  const BitValue s = nim_sum(piles);
  if (s == 0) return std::nullopt;
  for (std::size_t i = 0; i < piles.size(); ++i) {
    const Pile target = piles[i] ^ s;
    if (target < piles[i]) return Move::remove(i, piles[i] - target);
  }
  throw std::logic_error("nim_winning_move: no pile carries the top bit of the nim-sum");
}

/// Ground-truth P/N classification by memoized depth-first retrograde
/// search, plus theorem-backed advice fast paths. Memo keys are canonical
/// (sorted) positions; exceeding the entry budget throws instead of
/// truncating. One instance per thread; sweeps over independent roots
/// parallelize by giving each worker its own solver.
class Solver {
 public:
  static constexpr std::size_t kDefaultBudget = 5'000'000;

  explicit Solver(std::size_t max_memo_entries = kDefaultBudget)
      : budget_(max_memo_entries) {}

  Outcome outcome(const Position& p, Ruleset r) {
    const Position root = canonicalize(p);
    auto& memo = memo_[index(r)];
    if (auto it = memo.find(root); it != memo.end()) return it->second;
    // every total from 0 to the root sum appears as a distinct state, so a
    // sum at or past the budget cannot be solved within it
    if (total_objects(root) >= budget_) {
      throw BudgetExceededError("position sum " + std::to_string(total_objects(root)) +
                                " needs more than the memo budget of " +
                                std::to_string(budget_) + " entries");
    }
    solve(root, r);
    return memo.at(root);
  }

  /// A move leading to a P position, or nullopt when p is already P.
  /// Fast paths come first; the general case returns the first winning move
  /// in legal_moves order (removals before transfers, lower indices first,
  /// smaller counts first).
  std::optional<Move> advise(const Position& p, Ruleset r) {
    if (is_terminal(p)) return std::nullopt;
    if (r == Ruleset::Classic) return nim_winning_move(p);
    if (auto fast = fast_advice(p)) return *fast;
    for (const Move& m : legal_moves(p, r)) {
      if (outcome(apply_move(p, m, r), r) == Outcome::P) return m;
    }
    return std::nullopt;
  }

  Classification classify(const Position& p, Ruleset r) {
    if (r == Ruleset::Classic) {
      return {nim_sum(p) != 0 ? Outcome::N : Outcome::P, "nim-sum"};
    }
    std::size_t nonzero = 0;
    for (Pile x : p) nonzero += x > 0 ? 1 : 0;
    if (nonzero <= 2) {
      // At most two live piles: transfers cannot equalize them, so the game
      // plays out exactly like classic Nim.
      return {nim_sum(p) != 0 ? Outcome::N : Outcome::P, "nim-sum"};
    }
    if (p.size() == 3) {
      if (auto fam = family_pattern(p)) return {fam->winning ? Outcome::N : Outcome::P, fam->rule};
    }
    return {outcome(p, r), "search"};
  }

  /// Sharing Nim and classic Nim agree on every 2-pile position.
  bool two_pile_equivalence_check(Pile a, Pile b) {
    const Position p{a, b};
    return outcome(p, Ruleset::Sharing) == outcome(p, Ruleset::Classic);
  }

  std::size_t memo_size() const { return memo_[0].size() + memo_[1].size(); }

 private:
  using Memo = std::unordered_map<Position, Outcome, PositionHash>;

  struct FamilyMatch {
    std::string rule;
    bool winning;                // N-position?
    std::optional<Move> advice;  // set when winning
  };

  static std::size_t index(Ruleset r) { return r == Ruleset::Classic ? 0 : 1; }

  void note_insert(Memo& memo, const Position& key, Outcome value) {
    if (memo.size() >= budget_) {
      throw BudgetExceededError("solver memo budget of " + std::to_string(budget_) +
                                " entries exceeded");
    }
    memo.emplace(key, value);
  }

  /// Iterative DFS so that long transfer chains cannot overflow the call
  /// stack. Children are re-derived after a sub-solve; the memo hit makes
  /// the second pass cheap.
  void solve(const Position& root, Ruleset r) {
    struct Frame {
      Position pos;
      std::vector<Move> moves;
      std::size_t next = 0;
      bool winning = false;
    };
    auto& memo = memo_[index(r)];
    std::vector<Frame> stack;
    stack.push_back(Frame{root, legal_moves(root, r)});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.winning || f.next >= f.moves.size()) {
        note_insert(memo, f.pos, f.winning ? Outcome::N : Outcome::P);
        stack.pop_back();
        continue;
      }
      Position child = canonicalize(apply_move(f.pos, f.moves[f.next], r));
      auto it = memo.find(child);
      if (it == memo.end()) {
        auto moves = legal_moves(child, r);
        stack.push_back(Frame{std::move(child), std::move(moves)});  // f invalidated
        continue;
      }
      if (it->second == Outcome::P) f.winning = true;
      ++f.next;
    }
  }

  /// Matches the 3-pile families with known outcomes. Requires all piles
  /// positive (degenerate cases already went through the nim-sum route).
  std::optional<FamilyMatch> family_pattern(const Position& p) const {
    // a-a-b: two equal piles; removing the whole third pile leaves a
    // balanced 2-pile game.
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (p[i] != p[j]) continue;
        const std::size_t k = 3 - i - j;
        return FamilyMatch{"a-a-b", true, Move::remove(k, p[k])};
      }
    }
    // a-b-a+b: one pile equals the sum of the other two (all distinct here);
    // shifting the smaller summand onto the larger leaves (0, a+b, a+b).
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t i = k == 0 ? 1 : 0;
      const std::size_t j = k == 2 ? 1 : 2;
      if (p[k] != p[i] + p[j]) continue;
      const std::size_t src = p[i] < p[j] ? i : j;
      const std::size_t dst = src == i ? j : i;
      return FamilyMatch{"a-b-a+b", true, Move::transfer(src, dst, p[src])};
    }
    // 1-a-b with a,b >= 2 and |a-b| > 1: the singleton pile stays inert and
    // the pair walks a ladder of positions {1, k, k+2}. Exhaustive search
    // shows the P positions are exactly the rungs with k = 2,3 mod 4 (moving
    // four off the top pile hops down a rung, so rungs alternate in pairs
    // from the base {1,2,4}); every other position in the regime reaches a
    // winning rung by cutting the largest pile.
    for (std::size_t one = 0; one < 3; ++one) {
      if (p[one] != 1) continue;
      const std::size_t i = one == 0 ? 1 : 0;
      const std::size_t j = one == 2 ? 1 : 2;
      if (p[i] < 2 || p[j] < 2) break;
      const std::size_t lo_idx = p[i] <= p[j] ? i : j;
      const std::size_t hi_idx = lo_idx == i ? j : i;
      const Pile lo = p[lo_idx];
      const Pile hi = p[hi_idx];
      if (hi - lo <= 1) break;
      const bool lo_on_winning_rung = lo % 4 >= 2;
      if (hi == lo + 2 && lo_on_winning_rung) {
        return FamilyMatch{"1-a-b", false, std::nullopt};
      }
      const Pile target = lo_on_winning_rung ? lo + 2 : lo - 2;
      return FamilyMatch{"1-a-b", true, Move::remove(hi_idx, hi - target)};
    }
    return std::nullopt;
  }

  /// Fast advice without search. Outer nullopt: no fast path applies.
  std::optional<std::optional<Move>> fast_advice(const Position& p) {
    std::size_t nonzero = 0;
    for (Pile x : p) nonzero += x > 0 ? 1 : 0;
    if (nonzero <= 2) return std::optional<std::optional<Move>>{nim_winning_move(p)};
    if (p.size() != 3) return std::nullopt;
    if (auto fam = family_pattern(p)) {
      return std::optional<std::optional<Move>>{fam->winning ? fam->advice : std::nullopt};
    }
    return std::nullopt;
  }

  std::size_t budget_;
  Memo memo_[2];
};

}  // namespace sharenim
