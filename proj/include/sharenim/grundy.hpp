#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sharenim/bitops.hpp"
#include "sharenim/game.hpp"

namespace sharenim {

struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A game as a graph: nodes plus a follower function. Progressively bounded
/// graphs (finite, acyclic) are required; cycles are detected and thrown.
template <typename Node>
struct GameGraph {
  std::function<std::vector<Node>(const Node&)> followers;
};

/// Memoized Sprague-Grundy evaluation: mex over follower values, zero at
/// terminals. GrundyValue 0 marks exactly the P positions.
template <typename Node>
class GrundyEvaluator {
 public:
  explicit GrundyEvaluator(GameGraph<Node> graph) : graph_(std::move(graph)) {}

  BitValue value(const Node& node) {
    if (auto it = memo_.find(node); it != memo_.end()) return it->second;
    if (on_path_.contains(node)) {
      throw CycleError("game graph revisited a node on the current path");
    }
    on_path_.insert(node);
    std::vector<BitValue> child_values;
    for (const Node& next : graph_.followers(node)) {
      child_values.push_back(value(next));
    }
    on_path_.erase(node);
    const BitValue g = mex(child_values);
    memo_.emplace(node, g);
    return g;
  }

 private:
  GameGraph<Node> graph_;
  std::map<Node, BitValue> memo_;
  std::set<Node> on_path_;
};

template <typename Node>
BitValue grundy(const GameGraph<Node>& graph, const Node& node) {
  GrundyEvaluator<Node> eval(graph);
  return eval.value(node);
}

/// Disjunctive sum of two games: move in exactly one component.
template <typename N1, typename N2>
GameGraph<std::pair<N1, N2>> product_game(GameGraph<N1> g1, GameGraph<N2> g2) {
  GameGraph<std::pair<N1, N2>> product;
  product.followers = [g1 = std::move(g1), g2 = std::move(g2)](const std::pair<N1, N2>& node) {
    std::vector<std::pair<N1, N2>> next;
    for (const N1& a : g1.followers(node.first)) next.emplace_back(a, node.second);
    for (const N2& b : g2.followers(node.second)) next.emplace_back(node.first, b);
    return next;
  };
  return product;
}

/// Does the product game's Grundy value equal the XOR of the components'?
template <typename N1, typename N2>
bool grundy_sum_check(const GameGraph<N1>& g1, const GameGraph<N2>& g2, const N1& n1,
                      const N2& n2) {
  const BitValue direct = grundy(product_game(g1, g2), std::make_pair(n1, n2));
  return direct == (grundy(g1, n1) ^ grundy(g2, n2));
}

/// One Nim pile as a game graph: from n, move to any smaller size.
inline GameGraph<BitValue> nim_pile_graph() {
  GameGraph<BitValue> g;
  g.followers = [](const BitValue& n) {
    std::vector<BitValue> next;
    for (BitValue k = 0; k < n; ++k) next.push_back(k);
    return next;
  };
  return g;
}

/// Whole positions under a ruleset as a game graph (canonicalized nodes).
inline GameGraph<Position> position_graph(Ruleset r) {
  GameGraph<Position> g;
  g.followers = [r](const Position& p) {
    std::vector<Position> next;
    for (const Move& m : legal_moves(p, r)) {
      next.push_back(canonicalize(apply_move(p, m, r)));
    }
    return next;
  };
  return g;
}

}  // namespace sharenim
