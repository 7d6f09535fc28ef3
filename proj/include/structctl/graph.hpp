#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "structctl/core.hpp"

namespace structctl {

/// Directed graph on vertices 0..vertex_count-1 with sorted, duplicate-free
/// out-neighbor lists.
struct Digraph {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t arc_count() const;
  bool has_arc(std::size_t from, std::size_t to) const;
};

/// State digraph: arc x_j -> x_i for every nonzero A_ij.
Digraph build_state_digraph(const StructuredSystem& sys);

/// System digraph: states 0..n-1 then inputs n..n+m-1, with u_j -> x_i for
/// every nonzero B_ij on top of the state arcs.
Digraph build_system_digraph(const StructuredSystem& sys);

struct SccDecomposition {
  std::vector<std::size_t> component_of;
  /// Vertex lists, each ascending; components ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> components;
  /// Condensation arcs (from component, to component), sorted, no self arcs.
  std::vector<std::pair<std::size_t, std::size_t>> dag_edges;
  /// Components with no incoming condensation arc, ascending. Their count is q.
  std::vector<std::size_t> non_top_linked;

  std::size_t q() const { return non_top_linked.size(); }
  bool irreducible() const { return components.size() == 1; }
};

SccDecomposition scc_decompose(const Digraph& g);

}  // namespace structctl
