#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharenim/counting.hpp"
#include "sharenim/game.hpp"
#include "sharenim/oracle.hpp"
#include "sharenim/solver.hpp"

namespace sharenim {

/// One disagreement between a closed form (or theorem) and the oracle (or
/// solver). All three fields are space-free tokens so that structured
/// key=value output stays unambiguous.
struct Mismatch {
  std::string input;
  std::string expected;  // formula / theorem side
  std::string actual;    // oracle / solver side
};

/// Result of one formula-vs-oracle (or theorem-vs-solver) comparison run.
/// Clean means the two sides agreed on the whole range.
struct SweepReport {
  std::string name;
  std::uint64_t bound = 0;
  std::uint64_t cases = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> notes;

  bool clean() const { return mismatches.empty(); }

  std::string to_text(std::size_t max_listed = 20) const {
    std::ostringstream out;
    out << "sweep " << name << " bound " << bound << ": " << cases << " cases, "
        << mismatches.size() << " mismatch" << (mismatches.size() == 1 ? "" : "es")
        << (clean() ? " (clean)" : "") << "\n";
    std::size_t listed = 0;
    for (const Mismatch& m : mismatches) {
      if (listed++ >= max_listed) {
        out << "  ... and " << (mismatches.size() - max_listed) << " more\n";
        break;
      }
      out << "  " << m.input << ": expected " << m.expected << ", got " << m.actual << "\n";
    }
    for (const std::string& n : notes) out << "  note: " << n << "\n";
    return out.str();
  }

  /// One record per line. Keys: sweep/bound/cases/mismatches/clean on the
  /// header line, then input/expected/actual per mismatch, then note lines
  /// (a note's value runs to the end of its line).
  std::string to_structured() const {
    std::ostringstream out;
    out << "sweep=" << name << " bound=" << bound << " cases=" << cases
        << " mismatches=" << mismatches.size() << " clean=" << (clean() ? "true" : "false")
        << "\n";
    for (const Mismatch& m : mismatches) {
      out << "mismatch input=" << m.input << " expected=" << m.expected << " actual=" << m.actual
          << "\n";
    }
    for (const std::string& n : notes) out << "note=" << n << "\n";
    return out.str();
  }
};

inline const std::vector<std::string>& sweep_names() {
  static const std::vector<std::string> names = {
      "pairs",           "zero-nim-sum", "zero-nim-upto",  "absum",
      "followers",       "connectivity", "two-pile-equiv", "classic-nim-theorem",
      "transfer-parity", "nim-inside-nim"};
  return names;
}

namespace detail {

inline std::string csv(const Position& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

inline void add_count_mismatch(SweepReport& r, std::string input, std::uint64_t expected,
                               std::uint64_t actual) {
  r.mismatches.push_back({std::move(input), std::to_string(expected), std::to_string(actual)});
}

inline SweepReport sweep_pairs(std::uint64_t bound) {
  SweepReport r;
  r.name = "pairs";
  r.bound = bound;
  for (Pile S = 0; S <= bound; ++S) {
    for (Pile X = 0; X <= bound; ++X) {
      ++r.cases;
      const CountResult formula = pair_count(S, X);
      const std::uint64_t brute = oracle::brute_pairs(S, X);
      if (formula != brute) {
        add_count_mismatch(r, "S=" + std::to_string(S) + ",X=" + std::to_string(X), formula,
                           brute);
      }
    }
  }
  return r;
}

inline SweepReport sweep_zero_nim_sum(std::uint64_t bound) {
  SweepReport r;
  r.name = "zero-nim-sum";
  r.bound = bound;
  for (Pile S = 0; S <= bound; ++S) {
    ++r.cases;
    const CountResult formula = zero_nim_count_by_sum(S);
    const std::uint64_t brute = oracle::brute_zero_nim_triples(S).size();
    if (formula != brute) add_count_mismatch(r, "S=" + std::to_string(S), formula, brute);
  }
  return r;
}

inline SweepReport sweep_zero_nim_upto(std::uint64_t bound) {
  SweepReport r;
  r.name = "zero-nim-upto";
  r.bound = bound;
  std::uint64_t brute_cumulative = 0;
  for (Pile K = 0; K <= bound; ++K) {
    ++r.cases;
    brute_cumulative += oracle::brute_zero_nim_triples(K).size();
    const CountResult formula = zero_nim_count_upto(K);
    if (formula != brute_cumulative) {
      add_count_mismatch(r, "K=" + std::to_string(K), formula, brute_cumulative);
    }
  }
  return r;
}

inline SweepReport sweep_absum(std::uint64_t bound) {
  SweepReport r;
  r.name = "absum";
  r.bound = bound;
  std::uint64_t brute_cumulative = 0;
  std::uint64_t positions_checked = 0;
  for (unsigned k = 1; k <= bound; ++k) {
    ++r.cases;
    const auto positions = oracle::brute_absum_positions(k);
    brute_cumulative += positions.size();
    const CountResult exact = absum_count_exact_digits(k);
    if (exact != positions.size()) {
      add_count_mismatch(r, "exact-k=" + std::to_string(k), exact, positions.size());
    }
    const CountResult upto = absum_count_upto_digits(k);
    if (upto != brute_cumulative) {
      add_count_mismatch(r, "upto-k=" + std::to_string(k), upto, brute_cumulative);
    }
    for (const auto& t : positions) {
      // carry-free addition, zero nim-sum, two equal bit-lengths, third shorter
      ++positions_checked;
      auto sorted_t = t;
      std::sort(sorted_t.begin(), sorted_t.end());
      const bool shape_ok = std::bit_width(sorted_t[1]) == std::bit_width(sorted_t[2]) &&
                            std::bit_width(sorted_t[0]) < std::bit_width(sorted_t[1]);
      if ((t[0] & t[1]) != 0 || (t[0] ^ t[1] ^ t[2]) != 0 || !shape_ok) {
        r.mismatches.push_back({"structure-piles=" + std::to_string(t[0]) + "," +
                                    std::to_string(t[1]) + "," + std::to_string(t[2]),
                                "carry-free-shape", "violated"});
      }
    }
  }
  r.notes.push_back("all " + std::to_string(positions_checked) +
                    " enumerated positions are carry-free with the two-equal-bit-length shape");
  return r;
}

inline SweepReport sweep_followers(std::uint64_t bound) {
  SweepReport r;
  r.name = "followers";
  r.bound = bound;
  std::uint64_t carrying_moves = 0;
  for (Pile a = 0; 3 * a <= bound; ++a) {
    for (Pile b = a; a + 2 * b <= bound; ++b) {
      const Pile c = a ^ b;
      if (c < b || a + b + c > bound) continue;
      ++r.cases;
      const Position p{a, b, c};
      const auto brute = oracle::brute_zero_nim_followers(p);
      const CountResult formula = zero_nim_follower_count(p);
      if (formula != brute.size()) add_count_mismatch(r, "piles=" + csv(p), formula, brute.size());
      for (const auto& [move, result] : brute) {
        if (move.kind != Move::Kind::Transfer) continue;
        const Pile src = p[move.from];
        const Pile dst = p[move.to];
        if ((move.count & src) != move.count || (move.count & dst) != 0) ++carrying_moves;
      }
    }
  }
  r.notes.push_back(std::to_string(carrying_moves) +
                    " zero-nim-preserving transfers carry across digit places "
                    "(amount not confined to source-1/target-0 bit positions)");
  return r;
}

inline SweepReport sweep_connectivity(std::uint64_t bound) {
  SweepReport r;
  r.name = "connectivity";
  r.bound = bound;
  std::uint64_t sums_with_sinks = 0;
  for (Pile S = 0; S <= bound; ++S) {
    ++r.cases;
    const auto scan = oracle::connectivity_scan(S);
    if (scan.node_count > 0 && scan.component_count != 1) {
      add_count_mismatch(r, "S=" + std::to_string(S) + ",check=components", 1,
                         scan.component_count);
    }
    const CountResult seq = transferable_sequence_size(S);
    if (seq != scan.node_count) {
      add_count_mismatch(r, "S=" + std::to_string(S) + ",check=sequence-size", seq,
                         scan.node_count);
    }
    if (scan.sink_count > 0 && scan.node_count > 1) ++sums_with_sinks;
  }
  r.notes.push_back("undirected connectivity verified; " + std::to_string(sums_with_sinks) +
                    " sums have triples with no outgoing directed transfer, so directed "
                    "reachability is not symmetric");
  return r;
}

inline SweepReport sweep_two_pile(std::uint64_t bound) {
  SweepReport r;
  r.name = "two-pile-equiv";
  r.bound = bound;
  Solver solver;
  for (Pile a = 1; a <= bound; ++a) {
    for (Pile b = 1; b <= bound; ++b) {
      ++r.cases;
      const std::string input = "a=" + std::to_string(a) + ",b=" + std::to_string(b);
      if (!solver.two_pile_equivalence_check(a, b)) {
        r.mismatches.push_back({input, "sharing==classic", "differs"});
      }
      const bool sharing_P = solver.outcome({a, b}, Ruleset::Sharing) == Outcome::P;
      if (sharing_P != (a == b)) {
        r.mismatches.push_back({input, "P-iff-equal-piles", sharing_P ? "P" : "N"});
      }
    }
  }
  return r;
}

inline SweepReport sweep_classic_nim(std::uint64_t bound) {
  SweepReport r;
  r.name = "classic-nim-theorem";
  r.bound = bound;
  Solver solver;
  auto check = [&](const Position& pos) {
    ++r.cases;
    const Outcome searched = solver.outcome(pos, Ruleset::Classic);
    const Outcome predicted = nim_sum(pos) == 0 ? Outcome::P : Outcome::N;
    if (searched != predicted) {
      r.mismatches.push_back({"piles=" + csv(pos), std::string(1, outcome_letter(predicted)),
                              std::string(1, outcome_letter(searched))});
    }
    const auto move = nim_winning_move(pos);
    if (nim_sum(pos) == 0) {
      if (move) r.mismatches.push_back({"piles=" + csv(pos), "no-winning-move", "got-one"});
    } else if (!move || !is_legal(pos, *move, Ruleset::Classic) ||
               nim_sum(apply_move(pos, *move, Ruleset::Classic)) != 0) {
      r.mismatches.push_back({"piles=" + csv(pos), "legal-move-to-nim-sum-0", "missing-or-wrong"});
    }
  };
  for (Pile a = 0; a <= bound; ++a) {
    check({a});
    for (Pile b = 0; b <= bound; ++b) {
      check({a, b});
      for (Pile c = 0; c <= bound; ++c) check({a, b, c});
    }
  }
  return r;
}

inline SweepReport sweep_transfer_parity(std::uint64_t bound) {
  SweepReport r;
  r.name = "transfer-parity";
  r.bound = bound;
  for (Pile a = 0; a <= bound; ++a) {
    for (Pile b = a; b <= bound; ++b) {
      for (Pile c = b; c <= bound; ++c) {
        const Position p{a, b, c};
        const bool zero = (a ^ b ^ c) == 0;
        for (const Move& m : legal_moves(p, Ruleset::Sharing)) {
          if (zero && m.kind == Move::Kind::Remove) {
            ++r.cases;
            if (nim_sum(apply_move(p, m, Ruleset::Sharing)) == 0) {
              r.mismatches.push_back({"piles=" + csv(p) + ",remove=" + std::to_string(m.count) +
                                          ",pile=" + std::to_string(m.from + 1),
                                      "nonzero-nim-sum", "zero"});
            }
          } else if (!zero && m.kind == Move::Kind::Transfer) {
            ++r.cases;
            const Position q = apply_move(p, m, Ruleset::Sharing);
            if (nim_sum(q) == 0) {
              r.mismatches.push_back(
                  {"piles=" + csv(p) + ",transfer=" + std::to_string(m.count) + ",from=" +
                       std::to_string(m.from + 1) + ",to=" + std::to_string(m.to + 1),
                   "nonzero-nim-sum", "zero(" + csv(q) + ")"});
            }
          }
        }
      }
    }
  }
  return r;
}

inline SweepReport sweep_nim_inside_nim(std::uint64_t bound) {
  SweepReport r;
  r.name = "nim-inside-nim";
  r.bound = bound;
  Solver solver;
  for (Pile a = 2; a <= bound; ++a) {
    for (Pile b = a + 2; b <= bound; ++b) {
      ++r.cases;
      const bool predicted_P = ((a - 2) ^ (b - 4)) == 0;
      const bool actual_P = solver.outcome({1, a, b}, Ruleset::Sharing) == Outcome::P;
      if (predicted_P != actual_P) {
        r.mismatches.push_back({"piles=1," + std::to_string(a) + "," + std::to_string(b),
                                predicted_P ? "P" : "N", actual_P ? "P" : "N"});
      }
    }
  }
  if (bound >= 4) {
    ++r.cases;
    if (solver.outcome({1, 2, 4}, Ruleset::Sharing) != Outcome::P) {
      r.mismatches.push_back({"piles=1,2,4", "P", "N"});
    }
  }
  return r;
}

}  // namespace detail

/// Runs the named comparison up to the bound. Deterministic; throws
/// std::invalid_argument for unknown names.
inline SweepReport run_sweep(const std::string& name, std::uint64_t bound) {
  if (name == "pairs") return detail::sweep_pairs(bound);
  if (name == "zero-nim-sum") return detail::sweep_zero_nim_sum(bound);
  if (name == "zero-nim-upto") return detail::sweep_zero_nim_upto(bound);
  if (name == "absum") return detail::sweep_absum(bound);
  if (name == "followers") return detail::sweep_followers(bound);
  if (name == "connectivity") return detail::sweep_connectivity(bound);
  if (name == "two-pile-equiv") return detail::sweep_two_pile(bound);
  if (name == "classic-nim-theorem") return detail::sweep_classic_nim(bound);
  if (name == "transfer-parity") return detail::sweep_transfer_parity(bound);
  if (name == "nim-inside-nim") return detail::sweep_nim_inside_nim(bound);
  throw std::invalid_argument("unknown sweep '" + name + "'");
}

}  // namespace sharenim
