#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "sharenim/game.hpp"

// Deliberately naive ground truth. Everything here is raw loops over the
// game-core move engine; none of the closed forms from counting.hpp are
// used, so the two sides stay independent.

namespace sharenim::oracle {

using Triple = std::array<Pile, 3>;

/// Unordered positive pairs {a, b} with a + b = S and a XOR b = X, by loop.
inline std::uint64_t brute_pairs(Pile S, Pile X) {
  std::uint64_t n = 0;
  for (Pile a = 1; a <= S / 2; ++a) {
    const Pile b = S - a;
    if ((a ^ b) == X) ++n;
  }
  return n;
}

/// All a < b < c with a >= 1, a + b + c = S and zero XOR, lexicographic.
inline std::vector<Triple> brute_zero_nim_triples(Pile S) {
  std::vector<Triple> out;
  for (Pile a = 1; 3 * a < S; ++a) {
    for (Pile b = a + 1; a + 2 * b < S; ++b) {
      const Pile c = S - a - b;
      if ((a ^ b ^ c) == 0) out.push_back({a, b, c});
    }
  }
  return out;
}

/// All (a, b, a+b) with 1 <= a < b, zero XOR, whose two larger piles have
/// exactly k binary digits. Sorted lexicographically.
inline std::vector<Triple> brute_absum_positions(unsigned k) {
  std::vector<Triple> out;
  if (k < 1) return out;
  const Pile hi = Pile{1} << k;
  for (Pile b = 2; b < hi; ++b) {
    for (Pile a = 1; a < b; ++a) {
      const Pile s = a + b;
      if ((a ^ b ^ s) != 0) continue;
      Triple t{a, b, s};
      Triple sorted_t = t;
      std::sort(sorted_t.begin(), sorted_t.end());
      if (std::bit_width(sorted_t[1]) == k && std::bit_width(sorted_t[2]) == k) {
        out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every legal Sharing Nim move from p whose result is again zero-nim,
/// in legal_moves order.
inline std::vector<std::pair<Move, Position>> brute_zero_nim_followers(const Position& p) {
  std::vector<std::pair<Move, Position>> out;
  for (const Move& m : legal_moves(p, Ruleset::Sharing)) {
    Position q = apply_move(p, m, Ruleset::Sharing);
    Pile x = 0;
    for (Pile v : q) x ^= v;
    if (x == 0) out.emplace_back(m, std::move(q));
  }
  return out;
}

/// Transfer graph on the positive zero-nim triples of sum S.
struct ConnectivityScan {
  std::size_t node_count = 0;
  std::size_t component_count = 0;  // 0 when there are no nodes
  std::size_t edge_count = 0;       // undirected, deduplicated
  std::size_t sink_count = 0;       // nodes with no outgoing transfer to another positive triple
};

/// Builds the graph whose nodes are the positive zero-nim triples of sum S
/// and whose undirected edges join triples linked by one legal transfer.
/// Transfer legality is directed (smaller pile to larger), so the scan also
/// reports how many nodes have no outgoing edge at all.
inline ConnectivityScan connectivity_scan(Pile S) {
  const std::vector<Triple> nodes = brute_zero_nim_triples(S);
  ConnectivityScan scan;
  scan.node_count = nodes.size();
  if (nodes.empty()) return scan;

  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Position p{nodes[i][0], nodes[i][1], nodes[i][2]};
    bool any_out = false;
    for (const auto& [move, result] : brute_zero_nim_followers(p)) {
      if (move.kind != Move::Kind::Transfer) continue;
      Triple key{result[0], result[1], result[2]};
      std::sort(key.begin(), key.end());
      if (key[0] == 0) continue;  // left the positive-triple node set
      const auto it = std::lower_bound(nodes.begin(), nodes.end(), key);
      if (it == nodes.end() || *it != key) continue;
      const std::size_t j = static_cast<std::size_t>(it - nodes.begin());
      any_out = true;
      edges.emplace_back(std::min(i, j), std::max(i, j));
      parent[find(i)] = find(j);
    }
    if (!any_out) ++scan.sink_count;
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  scan.edge_count = edges.size();

  std::size_t components = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (find(i) == i) ++components;
  }
  scan.component_count = components;
  return scan;
}

}  // namespace sharenim::oracle
