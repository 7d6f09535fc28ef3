#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "structctl/core.hpp"

namespace structctl {

struct BipartiteEdge {
  std::size_t left = 0;
  std::size_t right = 0;
  friend auto operator<=>(const BipartiteEdge&, const BipartiteEdge&) = default;
};

/// Undirected bipartite graph. Left vertices 0..state_count-1 are states, the
/// rest (if any) are inputs; right vertices are the primed state copies.
struct BipartiteGraph {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::size_t state_count = 0;
  /// Sorted by (left, right), no duplicates.
  std::vector<BipartiteEdge> edges;
  /// Parallel to `edges` when present.
  std::optional<std::vector<Rational>> weights;

  bool is_input(std::size_t left) const { return left >= state_count; }
  std::optional<std::size_t> edge_index(std::size_t left, std::size_t right) const;
};

/// Set of disjoint edges, stored as (left, right) pairs sorted by right.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t size() const { return pairs.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// B(A): edge (x_i, x'_j) whenever the state digraph has x_i -> x_j.
BipartiteGraph build_state_bipartite(const StructuredSystem& sys);

/// B(A, B): states then inputs on the left. When `weighted`, state edges weigh
/// 0 and an input edge (u_j, x'_k) weighs the cost of u_j.
BipartiteGraph build_system_bipartite(const StructuredSystem& sys, bool weighted);

/// Hopcroft-Karp maximum-cardinality matching.
Matching max_matching(const BipartiteGraph& g);

/// Secondary preferences among matchings of equal total weight.
struct MatchingPreferences {
  /// Per-left-vertex bonus; among ties a larger total bonus of matched input
  /// vertices wins. Ignored for state vertices. Empty means all zero.
  std::vector<std::int64_t> input_bonus;
};

/// Minimum-weight matching that saturates every right vertex.
///
/// Ties on total weight are broken, in order, by fewer matched input
/// vertices, by larger total input bonus, and finally by the
/// lexicographically smallest sequence of left partners of x'_0, x'_1, ...
/// Throws Error(Infeasible) when no right-perfect matching exists.
Matching min_weight_perfect_matching(const BipartiteGraph& g, const MatchingPreferences& prefs = {});

/// Sum of weights of the matched edges (throws if the graph is unweighted).
Rational matching_weight(const BipartiteGraph& g, const Matching& m);

/// True when every pair is an edge of `g` and no endpoint repeats.
bool is_valid_matching(const BipartiteGraph& g, const Matching& m);

}  // namespace structctl
