// Command-line front end: exact counting queries, position classification,
// move advice, verification sweeps against brute-force oracles, and an
// interactive play loop for classic Nim and the sharing variant.
//
// Exit codes: 0 success / clean sweep, 1 usage error, 2 range or budget
// error, 3 verification mismatch.

#include <chrono>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sharenim/sharenim.hpp"

namespace {

using namespace sharenim;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRange = 2;
constexpr int kExitMismatch = 3;

struct Options {
  std::string rules;   // "", "classic" or "sharing"
  std::string format = "text";
};

bool structured(const Options& opt) { return opt.format == "structured"; }

Ruleset pick_rules(const Options& opt, const Position& piles) {
  if (opt.rules == "classic") return Ruleset::Classic;
  if (opt.rules == "sharing") return Ruleset::Sharing;
  // Default: sharing for 3 piles, classic otherwise.
  return piles.size() == 3 ? Ruleset::Sharing : Ruleset::Classic;
}

Position piles_from_args(const std::vector<std::string>& args) {
  std::string joined;
  for (const auto& a : args) {
    if (!joined.empty()) joined += ' ';
    joined += a;
  }
  Position p = parse_position(joined);
  if (p.empty()) throw std::invalid_argument("expected at least one pile size");
  return p;
}

std::string piles_csv(const Position& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

std::string move_text(const Move& m) {
  if (m.kind == Move::Kind::Remove) {
    return "remove " + std::to_string(m.count) + " from pile " + std::to_string(m.from + 1);
  }
  return "transfer " + std::to_string(m.count) + " from pile " + std::to_string(m.from + 1) +
         " to pile " + std::to_string(m.to + 1);
}

std::string move_structured(const Move& m) {
  if (m.kind == Move::Kind::Remove) {
    return "move=remove pile=" + std::to_string(m.from + 1) + " count=" + std::to_string(m.count);
  }
  return "move=transfer from=" + std::to_string(m.from + 1) + " to=" + std::to_string(m.to + 1) +
         " count=" + std::to_string(m.count);
}

BitValue parse_number(const std::string& token, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument(std::string("expected a non-negative integer for ") + what +
                                ", got '" + token + "'");
  }
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw std::range_error(std::string(what) + " '" + token + "' out of range");
  }
}

// ---- count ----

int cmd_count(const Options& opt, const std::vector<std::string>& args) {
  if (args.empty()) throw std::invalid_argument("count needs a subject");
  const std::string& subject = args[0];
  auto need = [&](std::size_t n) {
    if (args.size() != n + 1) {
      throw std::invalid_argument("count " + subject + " takes " + std::to_string(n) +
                                  " argument" + (n == 1 ? "" : "s"));
    }
  };
  CountResult value = 0;
  std::string keys;
  if (subject == "pairs") {
    need(2);
    const BitValue S = parse_number(args[1], "S");
    const BitValue X = parse_number(args[2], "X");
    value = pair_count(S, X);
    keys = "S=" + args[1] + " X=" + args[2];
  } else if (subject == "zero-nim-sum") {
    need(1);
    value = zero_nim_count_by_sum(parse_number(args[1], "S"));
    keys = "S=" + args[1];
  } else if (subject == "zero-nim-upto") {
    need(1);
    value = zero_nim_count_upto(parse_number(args[1], "K"));
    keys = "K=" + args[1];
  } else if (subject == "absum-exact") {
    need(1);
    const BitValue k = parse_number(args[1], "k");
    if (k < 1 || k > 64) throw std::domain_error("digit count must be in 1..64");
    value = absum_count_exact_digits(static_cast<unsigned>(k));
    keys = "k=" + args[1];
  } else if (subject == "absum-upto") {
    need(1);
    const BitValue k = parse_number(args[1], "k");
    if (k < 1 || k > 64) throw std::domain_error("digit count must be in 1..64");
    value = absum_count_upto_digits(static_cast<unsigned>(k));
    keys = "k=" + args[1];
  } else if (subject == "followers") {
    need(3);
    const Position p{parse_number(args[1], "pile"), parse_number(args[2], "pile"),
                     parse_number(args[3], "pile")};
    value = zero_nim_follower_count(p);
    keys = "piles=" + piles_csv(p);
  } else if (subject == "sequence-length") {
    need(1);
    value = transferable_sequence_size(parse_number(args[1], "S"));
    keys = "S=" + args[1];
  } else {
    throw std::invalid_argument("unknown count subject '" + subject + "'");
  }
  if (structured(opt)) {
    std::cout << "subject=" << subject << ' ' << keys << " count=" << value << '\n';
  } else {
    std::cout << value << '\n';
  }
  return kExitOk;
}

// ---- classify ----

int cmd_classify(const Options& opt, const std::vector<std::string>& args) {
  const Position piles = piles_from_args(args);
  const Ruleset rules = pick_rules(opt, piles);
  Solver solver;
  const Classification c = solver.classify(piles, rules);
  if (structured(opt)) {
    std::cout << "piles=" << piles_csv(piles) << " rules=" << ruleset_name(rules)
              << " outcome=" << outcome_letter(c.outcome) << " rule=" << c.rule << '\n';
    return kExitOk;
  }
  std::string why;
  if (c.rule == "nim-sum") {
    const BitValue s = nim_sum(piles);
    why = s == 0 ? "nim-sum 0" : "nim-sum " + std::to_string(s) + " != 0";
  } else if (c.rule == "search") {
    why = "general search";
  } else if (c.rule == "1-a-b") {
    why = "1-a-b reduction";
  } else {
    why = c.rule + " family";
  }
  std::cout << outcome_letter(c.outcome) << " (" << why << ")\n";
  return kExitOk;
}

// ---- advise ----

int cmd_advise(const Options& opt, const std::vector<std::string>& args) {
  const Position piles = piles_from_args(args);
  const Ruleset rules = pick_rules(opt, piles);
  Solver solver;
  const auto move = solver.advise(piles, rules);
  if (structured(opt)) {
    std::cout << "piles=" << piles_csv(piles) << " rules=" << ruleset_name(rules) << ' '
              << (move ? move_structured(*move) : "move=none outcome=P") << '\n';
    return kExitOk;
  }
  if (move) {
    std::cout << move_text(*move) << '\n';
  } else {
    std::cout << "P position: no winning move\n";
  }
  return kExitOk;
}

// ---- verify ----

int cmd_verify(const Options& opt, const std::string& name, std::uint64_t bound) {
  const auto start = std::chrono::steady_clock::now();
  const SweepReport report = run_sweep(name, bound);
  const auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  if (structured(opt)) {
    std::cout << report.to_structured();
    std::cerr << "elapsed_ms=" << elapsed.count() << '\n';
  } else {
    std::cout << report.to_text();
    std::cout << "elapsed: " << elapsed.count() << " ms\n";
  }
  return report.clean() ? kExitOk : kExitMismatch;
}

// ---- play ----

std::optional<Move> parse_human_move(const std::string& line) {
  std::istringstream in(line);
  std::string verb;
  if (!(in >> verb)) return std::nullopt;
  auto read_index = [&](std::size_t& out) {
    long long v = 0;
    if (!(in >> v) || v < 1) return false;
    out = static_cast<std::size_t>(v - 1);
    return true;
  };
  auto read_count = [&](Pile& out) {
    long long v = 0;
    if (!(in >> v) || v < 1) return false;
    out = static_cast<Pile>(v);
    return true;
  };
  std::string rest;
  if (verb == "remove") {
    std::size_t pile = 0;
    Pile count = 0;
    if (!read_index(pile) || !read_count(count) || (in >> rest)) return std::nullopt;
    return Move::remove(pile, count);
  }
  if (verb == "move" || verb == "transfer") {
    std::size_t from = 0, to = 0;
    Pile count = 0;
    if (!read_index(from) || !read_index(to) || !read_count(count) || (in >> rest)) {
      return std::nullopt;
    }
    return Move::transfer(from, to, count);
  }
  return std::nullopt;
}

int cmd_play(const Options& opt, const std::vector<std::string>& args, bool engine_first) {
  Position piles = piles_from_args(args);
  for (Pile x : piles) {
    if (x == 0) throw std::invalid_argument("starting piles must all be at least 1");
  }
  const Ruleset rules = pick_rules(opt, piles);
  Solver solver;

  std::cout << "rules: " << ruleset_name(rules) << "; you are the "
            << (engine_first ? "second" : "first") << " player\n";
  std::cout << "enter moves as \"remove <pile> <count>\" or \"move <from> <to> <count>\" "
               "(piles are numbered from 1)\n";
  std::cout << "piles: " << format_position(piles) << '\n';

  bool engines_turn = engine_first;
  while (!is_terminal(piles)) {
    if (engines_turn) {
      auto move = solver.advise(piles, rules);
      if (!move) move = first_legal_move(piles, rules);
      piles = apply_move(piles, *move, rules);
      std::cout << "engine: " << move_text(*move) << '\n';
      std::cout << "piles: " << format_position(piles) << '\n';
    } else {
      std::cout << "> " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) {
        std::cout << "\ninput closed; game aborted\n";
        return kExitOk;
      }
      const auto move = parse_human_move(line);
      if (!move) {
        std::cout << "could not parse that; use \"remove <pile> <count>\" or "
                     "\"move <from> <to> <count>\"\n";
        continue;
      }
      if (const auto why = move_violation(piles, *move, rules)) {
        std::cout << "illegal move: " << *why << '\n';
        continue;
      }
      piles = apply_move(piles, *move, rules);
      std::cout << "you: " << move_text(*move) << '\n';
      std::cout << "piles: " << format_position(piles) << '\n';
    }
    engines_turn = !engines_turn;
  }
  // Normal play: whoever made the last move took the last object and wins.
  std::cout << (engines_turn ? "you win\n" : "engine wins\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine and enumeration toolkit for classic Nim and sharing Nim"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--rules", opt.rules,
                    "ruleset: classic or sharing (default: sharing for 3 piles, classic otherwise)")
        ->check(CLI::IsMember({"classic", "sharing"}));
    cmd->add_option("--format", opt.format, "output mode: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };
  add_common(&app);

  std::vector<std::string> count_args;
  auto* count = app.add_subcommand("count", "exact counting queries");
  add_common(count);
  count->add_option("query", count_args,
                    "pairs S X | zero-nim-sum S | zero-nim-upto K | absum-exact k | "
                    "absum-upto k | followers a b c | sequence-length S")
      ->expected(-1);

  std::vector<std::string> classify_args;
  auto* classify = app.add_subcommand("classify", "P/N classification with the rule that decided");
  add_common(classify);
  classify->add_option("piles", classify_args, "pile sizes")->required()->expected(-1);

  std::vector<std::string> advise_args;
  auto* advise = app.add_subcommand("advise", "best move, or report that the position is lost");
  add_common(advise);
  advise->add_option("piles", advise_args, "pile sizes")->required()->expected(-1);

  std::vector<std::string> play_args;
  std::string engine_seat = "second";
  auto* play = app.add_subcommand("play", "interactive game against the engine");
  add_common(play);
  play->add_option("piles", play_args, "starting pile sizes (all >= 1)")->required()->expected(-1);
  play->add_option("--engine", engine_seat, "engine seat: first or second (default second)")
      ->check(CLI::IsMember({"first", "second"}));

  std::string sweep_name;
  std::uint64_t sweep_bound = 0;
  auto* verify = app.add_subcommand("verify", "formula-vs-oracle and theorem-vs-solver sweeps");
  add_common(verify);
  verify->add_option("sweep", sweep_name,
                     "pairs | zero-nim-sum | zero-nim-upto | absum | followers | connectivity | "
                     "two-pile-equiv | classic-nim-theorem | transfer-parity | nim-inside-nim")
      ->required();
  verify->add_option("bound", sweep_bound, "sweep bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(opt, count_args);
    if (classify->parsed()) return cmd_classify(opt, classify_args);
    if (advise->parsed()) return cmd_advise(opt, advise_args);
    if (play->parsed()) return cmd_play(opt, play_args, engine_seat == "first");
    if (verify->parsed()) return cmd_verify(opt, sweep_name, sweep_bound);
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRange;
  } catch (const std::range_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRange;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRange;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRange;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
