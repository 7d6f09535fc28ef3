#include "structctl/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <tuple>

#include "structctl/detail/ssp.hpp"
#include "structctl/graph.hpp"

namespace structctl {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Lexicographic cost (weight, matched inputs, -bonus). An ordered abelian
// group, so potentials and reduced costs work exactly as with scalars.
struct TieCost {
  Rational weight;
  std::int64_t inputs = 0;
  std::int64_t neg_bonus = 0;

  friend TieCost operator+(const TieCost& a, const TieCost& b) {
    return {a.weight + b.weight, a.inputs + b.inputs, a.neg_bonus + b.neg_bonus};
  }
  friend TieCost operator-(const TieCost& a, const TieCost& b) {
    return {a.weight - b.weight, a.inputs - b.inputs, a.neg_bonus - b.neg_bonus};
  }
  friend bool operator<(const TieCost& a, const TieCost& b) {
    return std::tie(a.weight, a.inputs, a.neg_bonus) < std::tie(b.weight, b.inputs, b.neg_bonus);
  }
  friend bool operator==(const TieCost&, const TieCost&) = default;
};

BipartiteGraph make_bipartite(std::size_t left, std::size_t right, std::size_t states,
                              std::vector<BipartiteEdge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return BipartiteGraph{left, right, states, std::move(edges), std::nullopt};
}

}  // namespace

std::optional<std::size_t> BipartiteGraph::edge_index(std::size_t left, std::size_t right) const {
  BipartiteEdge key{left, right};
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges.begin());
}

BipartiteGraph build_state_bipartite(const StructuredSystem& sys) {
  Digraph d = build_state_digraph(sys);
  const std::size_t n = sys.state_count();
  std::vector<BipartiteEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : d.adjacency[i]) edges.push_back({i, j});
  }
  return make_bipartite(n, n, n, std::move(edges));
}

BipartiteGraph build_system_bipartite(const StructuredSystem& sys, bool weighted) {
  BipartiteGraph g = build_state_bipartite(sys);
  const std::size_t n = sys.state_count();
  const std::size_t m = sys.input_count();
  g.left_count = n + m;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k : sys.b_bar.column(j)) g.edges.push_back({n + j, k});
  }
  // Input vertices sort after every state vertex, so edges stay ordered.
  if (weighted) {
    std::vector<Rational> w;
    w.reserve(g.edges.size());
    for (const auto& e : g.edges) w.push_back(e.left < n ? Rational(0) : sys.input_costs[e.left - n]);
    g.weights = std::move(w);
  }
  return g;
}

Matching max_matching(const BipartiteGraph& g) {
  const std::size_t L = g.left_count, R = g.right_count;
  std::vector<std::vector<std::size_t>> adj(L);
  for (const auto& e : g.edges) adj[e.left].push_back(e.right);
  std::vector<std::size_t> match_left(L, kNone), match_right(R, kNone), dist(L);
  std::vector<std::size_t> next(L);

  auto bfs = [&]() {
    std::deque<std::size_t> queue;
    bool found = false;
    for (std::size_t u = 0; u < L; ++u) {
      if (match_left[u] == kNone) {
        dist[u] = 0;
        queue.push_back(u);
      } else {
        dist[u] = kNone;
      }
    }
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj[u]) {
        std::size_t w = match_right[v];
        if (w == kNone) {
          found = true;
        } else if (dist[w] == kNone) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  };

  // Iterative layered DFS to keep stack depth independent of graph size.
  auto dfs = [&](std::size_t root) {
    std::vector<std::size_t> path{root};
    while (!path.empty()) {
      std::size_t u = path.back();
      if (next[u] == adj[u].size()) {
        dist[u] = kNone;
        path.pop_back();
        if (!path.empty()) ++next[path.back()];
        continue;
      }
      std::size_t v = adj[u][next[u]];
      std::size_t w = match_right[v];
      if (w == kNone) {
        // Augment along the path: each path[i] takes its current candidate.
        for (std::size_t i = path.size(); i-- > 0;) {
          std::size_t a = path[i];
          std::size_t b = adj[a][next[a]];
          match_left[a] = b;
          match_right[b] = a;
        }
        return true;
      }
      if (dist[w] != kNone && dist[w] == dist[u] + 1) {
        path.push_back(w);
      } else {
        ++next[u];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t u = 0; u < L; ++u) {
      if (match_left[u] == kNone) dfs(u);
    }
  }

  Matching out;
  for (std::size_t v = 0; v < R; ++v) {
    if (match_right[v] != kNone) out.pairs.push_back({match_right[v], v});
  }
  return out;
}

Matching min_weight_perfect_matching(const BipartiteGraph& g, const MatchingPreferences& prefs) {
  if (!g.weights) throw Error(ErrorCode::Infeasible, "minimum-weight matching needs edge weights");
  const std::size_t L = g.left_count, R = g.right_count;
  if (R > L) throw Error(ErrorCode::Infeasible, "more right vertices than left vertices");

  const std::size_t source = 0, sink = 1 + R + L;
  auto right_node = [](std::size_t k) { return 1 + k; };
  auto left_node = [R](std::size_t l) { return 1 + R + l; };

  detail::ResidualNetwork<TieCost> net(R + L + 2);
  for (std::size_t k = 0; k < R; ++k) net.add_arc(source, right_node(k), 1, TieCost{});
  std::vector<std::size_t> edge_arc(g.edges.size());
  std::vector<std::vector<std::size_t>> by_right(R);  // edge indices, ascending left
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    TieCost c{(*g.weights)[e], 0, 0};
    if (g.is_input(edge.left)) {
      c.inputs = 1;
      if (edge.left < prefs.input_bonus.size()) c.neg_bonus = -prefs.input_bonus[edge.left];
      if (c < TieCost{}) throw Error(ErrorCode::Infeasible, "negative matching weight");
    }
    edge_arc[e] = net.add_arc(right_node(edge.right), left_node(edge.left), 1, c);
    by_right[edge.right].push_back(e);
  }
  std::vector<std::size_t> left_arc(L);
  for (std::size_t l = 0; l < L; ++l) left_arc[l] = net.add_arc(left_node(l), sink, 1, TieCost{});

  if (net.augment(source, sink, static_cast<std::int64_t>(R)) < static_cast<std::int64_t>(R)) {
    throw Error(ErrorCode::Infeasible, "no matching saturates all primed states");
  }

  // Every optimal matching differs from the current one by zero-cost residual
  // cycles, which use only arcs of zero reduced cost. Walk the right vertices
  // in order and rotate in the smallest feasible left partner each time.
  const std::vector<TieCost> pot = net.exact_potentials();
  auto tight = [&](std::size_t a) {
    const auto& arc = net.arc(a);
    return arc.residual > 0 && arc.cost + pot[net.tail(a)] - pot[arc.to] == TieCost{};
  };
  std::vector<std::size_t> match_right(R, kNone);
  auto read_matching = [&]() {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (net.flow(edge_arc[e]) > 0) match_right[g.edges[e].right] = e;
    }
  };
  read_matching();

  std::vector<bool> blocked(R + L + 2, false);
  blocked[source] = true;
  std::vector<std::size_t> parent_arc(R + L + 2);
  for (std::size_t k = 0; k < R; ++k) {
    blocked[right_node(k)] = true;
    const std::size_t current = match_right[k];
    const std::size_t back_arc = 2 * edge_arc[current] + 1;  // L_current -> R_k
    for (std::size_t e : by_right[k]) {
      if (e == current) break;
      const std::size_t fwd = 2 * edge_arc[e];
      if (!tight(fwd) || !tight(back_arc)) continue;
      const std::size_t from = left_node(g.edges[e].left);
      const std::size_t goal = left_node(g.edges[current].left);
      std::fill(parent_arc.begin(), parent_arc.end(), kNone);
      std::deque<std::size_t> queue{from};
      std::vector<bool> seen(R + L + 2, false);
      seen[from] = true;
      while (!queue.empty() && !seen[goal]) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t a : net.out(v)) {
          std::size_t w = net.arc(a).to;
          if (seen[w] || blocked[w] || !tight(a)) continue;
          seen[w] = true;
          parent_arc[w] = a;
          queue.push_back(w);
        }
      }
      if (!seen[goal]) continue;
      std::vector<std::size_t> cycle{fwd, back_arc};
      for (std::size_t v = goal; v != from; v = net.tail(parent_arc[v])) cycle.push_back(parent_arc[v]);
      for (std::size_t a : cycle) {
        net.arc(a).residual -= 1;
        net.arc(a ^ 1).residual += 1;
      }
      std::fill(match_right.begin(), match_right.end(), kNone);
      read_matching();
      break;
    }
  }

  Matching out;
  for (std::size_t k = 0; k < R; ++k) out.pairs.push_back({g.edges[match_right[k]].left, k});
  return out;
}

Rational matching_weight(const BipartiteGraph& g, const Matching& m) {
  if (!g.weights) throw Error(ErrorCode::InvalidMatching, "graph has no weights");
  Rational total;
  for (const auto& [l, r] : m.pairs) {
    auto e = g.edge_index(l, r);
    if (!e) throw Error(ErrorCode::InvalidMatching, "pair is not an edge of the graph");
    total += (*g.weights)[*e];
  }
  return total;
}

bool is_valid_matching(const BipartiteGraph& g, const Matching& m) {
  std::vector<bool> used_left(g.left_count, false), used_right(g.right_count, false);
  for (const auto& [l, r] : m.pairs) {
    if (l >= g.left_count || r >= g.right_count) return false;
    if (!g.edge_index(l, r)) return false;
    if (used_left[l] || used_right[r]) return false;
    used_left[l] = used_right[r] = true;
  }
  return true;
}

}  // namespace structctl
