#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "sharenim/solver.hpp"

using namespace sharenim;

TEST_CASE("outcome anchors") {
  Solver solver;
  CHECK(solver.outcome({0, 0, 0}, Ruleset::Sharing) == Outcome::P);
  CHECK(solver.outcome({1, 2, 4}, Ruleset::Sharing) == Outcome::P);
  CHECK(solver.outcome({3, 3, 5}, Ruleset::Sharing) == Outcome::N);
  CHECK(solver.outcome({1, 2, 3}, Ruleset::Sharing) == Outcome::N);
  CHECK(solver.outcome({3, 5}, Ruleset::Classic) == Outcome::N);
  CHECK(solver.outcome({1, 4, 6}, Ruleset::Sharing) == Outcome::N);
  CHECK(solver.outcome({1, 6, 8}, Ruleset::Sharing) == Outcome::P);
  CHECK(solver.outcome({1, 3, 5}, Ruleset::Sharing) == Outcome::P);
}

TEST_CASE("outcome is invariant under pile reordering") {
  Solver solver;
  std::mt19937_64 rng(99);
  for (int round = 0; round < 60; ++round) {
    Position p(2 + rng() % 2 + 1);
    for (auto& x : p) x = rng() % 9;
    Position shuffled = p;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    REQUIRE(solver.outcome(p, Ruleset::Sharing) == solver.outcome(shuffled, Ruleset::Sharing));
  }
}

TEST_CASE("normal-play recurrence holds on every solved position") {
  Solver solver;
  for (Pile a = 0; a <= 6; ++a) {
    for (Pile b = a; b <= 7; ++b) {
      for (Pile c = b; c <= 8; ++c) {
        const Position p{a, b, c};
        bool has_P_child = false;
        for (const Move& m : legal_moves(p, Ruleset::Sharing)) {
          if (solver.outcome(apply_move(p, m), Ruleset::Sharing) == Outcome::P) {
            has_P_child = true;
            break;
          }
        }
        const Outcome o = solver.outcome(p, Ruleset::Sharing);
        REQUIRE((o == Outcome::N) == has_P_child);
      }
    }
  }
}

TEST_CASE("memo budget overrun is an explicit error") {
  Solver tiny(8);
  CHECK_THROWS_AS(tiny.outcome({5, 6, 7}, Ruleset::Sharing), BudgetExceededError);
  CHECK_THROWS_WITH(tiny.outcome({5, 6, 7}, Ruleset::Sharing),
                    Catch::Matchers::ContainsSubstring("budget"));
}

TEST_CASE("two-pile sharing matches classic nim") {
  Solver solver;
  CHECK(solver.two_pile_equivalence_check(4, 4));
  CHECK(solver.two_pile_equivalence_check(3, 5));
  CHECK(solver.two_pile_equivalence_check(1, 1));
  CHECK(solver.outcome({4, 4}, Ruleset::Sharing) == Outcome::P);
  CHECK(solver.outcome({3, 5}, Ruleset::Sharing) == Outcome::N);
}

TEST_CASE("nim_winning_move follows the top-bit construction") {
  const auto from_3_5 = nim_winning_move({3, 5});
  REQUIRE(from_3_5.has_value());
  CHECK(*from_3_5 == Move::remove(1, 2));  // 5 -> 3, nim-sum 0

  CHECK_FALSE(nim_winning_move({1, 2, 3}).has_value());
  CHECK_FALSE(nim_winning_move({}).has_value());

  const auto single = nim_winning_move({5});
  REQUIRE(single.has_value());
  CHECK(*single == Move::remove(0, 5));
}

TEST_CASE("advise anchors") {
  Solver solver;
  CHECK(solver.advise({3, 3, 5}, Ruleset::Sharing) == Move::remove(2, 5));
  CHECK(solver.advise({1, 2, 3}, Ruleset::Sharing) == Move::transfer(0, 1, 1));
  CHECK_FALSE(solver.advise({1, 2, 4}, Ruleset::Sharing).has_value());
  CHECK(solver.advise({4, 3, 5}, Ruleset::Sharing) == Move::remove(0, 3));  // to {1,3,5}
  CHECK(solver.advise({3, 5}, Ruleset::Classic) == Move::remove(1, 2));
  CHECK(solver.advise({0, 2, 3}, Ruleset::Sharing) == Move::remove(2, 1));
  CHECK_FALSE(solver.advise({0, 0}, Ruleset::Sharing).has_value());
}

TEST_CASE("1-a-b fast path uses the corrected rung law") {
  Solver solver;
  // {1, lo, lo+2} is lost exactly when lo is 2 or 3 mod 4
  CHECK_FALSE(solver.advise({1, 6, 8}, Ruleset::Sharing).has_value());
  CHECK_FALSE(solver.advise({1, 2, 4}, Ruleset::Sharing).has_value());
  // lo = 4: hop down a rung by taking four off the top pile
  CHECK(solver.advise({1, 4, 6}, Ruleset::Sharing) == Move::remove(2, 4));
  // lo = 9 (1 mod 4): cut the big pile down to lo - 2 = 7
  const auto move = solver.advise({1, 9, 20}, Ruleset::Sharing);
  REQUIRE(move.has_value());
  CHECK(*move == Move::remove(2, 13));
  CHECK(solver.outcome(apply_move({1, 9, 20}, *move), Ruleset::Sharing) == Outcome::P);
  // lo = 6 (winning rung), big pile above the rung: cut down to lo + 2
  CHECK(solver.advise({1, 6, 17}, Ruleset::Sharing) == Move::remove(2, 9));
  // fast-path advice must be search-correct across the whole small regime
  for (Pile a = 2; a <= 14; ++a) {
    for (Pile b = a + 2; b <= 16; ++b) {
      const Position p{1, a, b};
      const auto advice = solver.advise(p, Ruleset::Sharing);
      if (advice) {
        REQUIRE(solver.outcome(apply_move(p, *advice), Ruleset::Sharing) == Outcome::P);
      } else {
        REQUIRE(solver.outcome(p, Ruleset::Sharing) == Outcome::P);
      }
    }
  }
}

TEST_CASE("advised moves are winning and deterministic on small positions") {
  Solver solver;
  for (Pile a = 0; a <= 5; ++a) {
    for (Pile b = 0; b <= 5; ++b) {
      for (Pile c = 0; c <= 5; ++c) {
        const Position p{a, b, c};
        const auto advice = solver.advise(p, Ruleset::Sharing);
        const auto again = solver.advise(p, Ruleset::Sharing);
        REQUIRE(advice == again);
        if (advice) {
          REQUIRE(is_legal(p, *advice, Ruleset::Sharing));
          REQUIRE(solver.outcome(apply_move(p, *advice), Ruleset::Sharing) == Outcome::P);
          REQUIRE(solver.outcome(p, Ruleset::Sharing) == Outcome::N);
        } else {
          REQUIRE(solver.outcome(p, Ruleset::Sharing) == Outcome::P);
        }
      }
    }
  }
}

TEST_CASE("classify reports the deciding rule") {
  Solver solver;
  auto check = [&](Position p, Ruleset r, Outcome o, const std::string& rule) {
    const Classification c = solver.classify(p, r);
    CHECK(c.outcome == o);
    CHECK(c.rule == rule);
  };
  check({3, 5}, Ruleset::Classic, Outcome::N, "nim-sum");
  check({1, 2, 3}, Ruleset::Classic, Outcome::P, "nim-sum");
  check({4, 4}, Ruleset::Sharing, Outcome::P, "nim-sum");
  check({0, 3, 4}, Ruleset::Sharing, Outcome::N, "nim-sum");
  check({3, 3, 5}, Ruleset::Sharing, Outcome::N, "a-a-b");
  check({7, 7, 7}, Ruleset::Sharing, Outcome::N, "a-a-b");
  check({2, 3, 5}, Ruleset::Sharing, Outcome::N, "a-b-a+b");
  check({1, 2, 4}, Ruleset::Sharing, Outcome::P, "1-a-b");
  check({1, 4, 6}, Ruleset::Sharing, Outcome::N, "1-a-b");
  check({2, 6, 7}, Ruleset::Sharing, solver.outcome({2, 6, 7}, Ruleset::Sharing), "search");
  check({2, 3, 4, 5}, Ruleset::Sharing, solver.outcome({2, 3, 4, 5}, Ruleset::Sharing), "search");
}

TEST_CASE("classify agrees with the search outcome everywhere sampled") {
  Solver solver;
  for (Pile a = 0; a <= 9; ++a) {
    for (Pile b = 0; b <= 9; ++b) {
      for (Pile c = 0; c <= 9; ++c) {
        const Position p{a, b, c};
        REQUIRE(solver.classify(p, Ruleset::Sharing).outcome ==
                solver.outcome(p, Ruleset::Sharing));
        REQUIRE(solver.classify(p, Ruleset::Classic).outcome ==
                solver.outcome(p, Ruleset::Classic));
      }
    }
  }
  for (Pile a = 0; a <= 12; ++a) {
    for (Pile b = 0; b <= 12; ++b) {
      const Position p{a, b};
      REQUIRE(solver.classify(p, Ruleset::Sharing).outcome == solver.outcome(p, Ruleset::Sharing));
    }
  }
}
