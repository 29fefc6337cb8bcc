#pragma once

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharenim/bitops.hpp"

namespace sharenim {

using Pile = std::uint64_t;

/// A game state: the sequence of pile sizes. Starting positions have every
/// pile >= 1; zeros appear mid-game and stay in the vector.
using Position = std::vector<Pile>;

enum class Ruleset { Classic, Sharing };

inline const char* ruleset_name(Ruleset r) {
  return r == Ruleset::Classic ? "classic" : "sharing";
}

struct Move {
  enum class Kind { Remove, Transfer };

  Kind kind = Kind::Remove;
  std::size_t from = 0;  // source pile; the only pile for removals
  std::size_t to = 0;    // target pile, transfers only
  Pile count = 0;

  static Move remove(std::size_t pile, Pile count) {
    return Move{Kind::Remove, pile, pile, count};
  }
  static Move transfer(std::size_t from, std::size_t to, Pile count) {
    return Move{Kind::Transfer, from, to, count};
  }

  friend bool operator==(const Move&, const Move&) = default;
};

struct IllegalMoveError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline bool is_terminal(const Position& p) {
  return std::all_of(p.begin(), p.end(), [](Pile x) { return x == 0; });
}

/// Sorted-ascending copy. Rules depend only on the multiset of sizes, so
/// canonical positions make good memo keys.
inline Position canonicalize(Position p) {
  std::sort(p.begin(), p.end());
  return p;
}

inline Pile total_objects(const Position& p) {
  Pile sum = 0;
  for (Pile x : p) sum += x;
  return sum;
}

/// Why the move is not playable in this position, or nullopt if it is.
/// Transfer legality compares pile sizes before the move: the source pile
/// may not be larger than the target pile. Equal piles may transfer.
inline std::optional<std::string> move_violation(const Position& p, const Move& m, Ruleset r) {
  if (m.from >= p.size()) return "no such pile";
  if (m.count < 1) return "count must be at least 1";
  if (m.kind == Move::Kind::Remove) {
    if (m.count > p[m.from]) return "cannot remove more objects than the pile holds";
    return std::nullopt;
  }
  if (r == Ruleset::Classic) return "transfers are not allowed under classic rules";
  if (m.to >= p.size()) return "no such pile";
  if (m.from == m.to) return "source and target piles must differ";
  if (m.count > p[m.from]) return "cannot transfer more objects than the pile holds";
  if (p[m.from] > p[m.to]) return "cannot transfer from a larger pile to a smaller pile";
  return std::nullopt;
}

inline bool is_legal(const Position& p, const Move& m, Ruleset r) {
  return !move_violation(p, m, r).has_value();
}

inline Position apply_move(const Position& p, const Move& m, Ruleset r = Ruleset::Sharing) {
  if (auto why = move_violation(p, m, r)) throw IllegalMoveError(*why);
  Position q = p;
  if (m.kind == Move::Kind::Remove) {
    q[m.from] -= m.count;
  } else {
    q[m.from] -= m.count;
    q[m.to] += m.count;
  }
  return q;
}

/// All legal moves in a fixed deterministic order: removals first (pile
/// ascending, count ascending), then transfers (source ascending, target
/// ascending, count ascending). Empty exactly at terminal positions.
inline std::vector<Move> legal_moves(const Position& p, Ruleset r) {
  std::vector<Move> moves;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (Pile c = 1; c <= p[i]; ++c) moves.push_back(Move::remove(i, c));
  }
  if (r == Ruleset::Sharing) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (i == j || p[i] > p[j]) continue;
        for (Pile c = 1; c <= p[i]; ++c) moves.push_back(Move::transfer(i, j, c));
      }
    }
  }
  return moves;
}

/// First move of legal_moves(p, r) without building the whole list.
inline std::optional<Move> first_legal_move(const Position& p, Ruleset r) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0) return Move::remove(i, 1);
  }
  (void)r;
  return std::nullopt;
}

/// Text format: comma-or-space separated non-negative integers, e.g. "7 11 12".
inline Position parse_position(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  Position p;
  std::string token;
  while (in >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad pile size '" + token + "'");
    }
    Pile value = 0;
    try {
      value = std::stoull(token);
    } catch (const std::out_of_range&) {
      throw std::range_error("pile size '" + token + "' out of range");
    }
    check_width(value);
    p.push_back(value);
  }
  return p;
}

inline std::string format_position(const Position& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace sharenim
