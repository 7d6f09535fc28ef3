#include "structctl/graph.hpp"

#include <algorithm>
#include <limits>

namespace structctl {

std::size_t Digraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& out : adjacency) total += out.size();
  return total;
}

bool Digraph::has_arc(std::size_t from, std::size_t to) const {
  const auto& out = adjacency.at(from);
  return std::binary_search(out.begin(), out.end(), to);
}

Digraph build_state_digraph(const StructuredSystem& sys) {
  validate_system(sys);
  const std::size_t n = sys.state_count();
  Digraph g{n, std::vector<std::vector<std::size_t>>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i : sys.a_bar.column(j)) g.adjacency[j].push_back(i);
  }
  return g;
}

Digraph build_system_digraph(const StructuredSystem& sys) {
  Digraph g = build_state_digraph(sys);
  const std::size_t n = sys.state_count();
  const std::size_t m = sys.input_count();
  g.vertex_count = n + m;
  g.adjacency.resize(n + m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i : sys.b_bar.column(j)) g.adjacency[n + j].push_back(i);
  }
  return g;
}

// Iterative Tarjan; raw component ids are renumbered afterwards so that
// components are ordered by their smallest vertex.
SccDecomposition scc_decompose(const Digraph& g) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.vertex_count;
  std::vector<std::size_t> index(n, kUnset), low(n, 0), raw(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next neighbor position)
  std::size_t counter = 0;
  std::size_t raw_count = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < g.adjacency[v].size()) {
        std::size_t w = g.adjacency[v][pos++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          raw[w] = raw_count;
        } while (w != v);
        ++raw_count;
      }
      std::size_t finished = v;
      call.pop_back();
      if (!call.empty()) {
        std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }

  SccDecomposition out;
  out.component_of.assign(n, kUnset);
  std::vector<std::size_t> renumber(raw_count, kUnset);
  for (std::size_t v = 0; v < n; ++v) {
    if (renumber[raw[v]] == kUnset) {
      renumber[raw[v]] = out.components.size();
      out.components.emplace_back();
    }
    out.component_of[v] = renumber[raw[v]];
    out.components[out.component_of[v]].push_back(v);
  }

  std::vector<bool> has_incoming(out.components.size(), false);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : g.adjacency[v]) {
      std::size_t cv = out.component_of[v], cw = out.component_of[w];
      if (cv == cw) continue;
      out.dag_edges.push_back({cv, cw});
      has_incoming[cw] = true;
    }
  }
  std::sort(out.dag_edges.begin(), out.dag_edges.end());
  out.dag_edges.erase(std::unique(out.dag_edges.begin(), out.dag_edges.end()), out.dag_edges.end());
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    if (!has_incoming[c]) out.non_top_linked.push_back(c);
  }
  return out;
}

}  // namespace structctl
