#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "structctl/core.hpp"
#include "structctl/graph.hpp"

namespace structctl {

enum class VertexRole { Source, Sink, Scc, PrimedState, State, Input, PrimedInput };

struct FlowVertex {
  VertexRole role = VertexRole::State;
  std::size_t index = 0;  // i for N_i, k for x'_k, and so on; 0 for s and t
};

struct FlowEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t capacity = 0;
  Rational cost;
};

/// Vertex numbering of a network built from a structured system:
/// s, t, N_0..N_{q-1}, x'_0.., x_0.., u_0.., u'_0..
struct SystemLayout {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t q = 0;
  /// State vertices of each non-top-linked SCC, indexed like N_i.
  std::vector<std::vector<std::size_t>> scc_members;

  std::size_t scc(std::size_t i) const { return 2 + i; }
  std::size_t primed_state(std::size_t k) const { return 2 + q + k; }
  std::size_t state(std::size_t r) const { return 2 + q + n + r; }
  std::size_t input(std::size_t j) const { return 2 + q + 2 * n + j; }
  std::size_t primed_input(std::size_t j) const { return 2 + q + 2 * n + m + j; }
};

/// Directed network with integer capacities and non-negative rational costs.
class FlowNetwork {
 public:
  FlowNetwork() = default;

  std::size_t add_vertex(VertexRole role, std::size_t index = 0);
  std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t capacity, Rational cost = {});
  void set_cost(std::size_t edge, Rational cost) { edges_.at(edge).cost = cost; }

  std::size_t source() const { return source_; }
  std::size_t sink() const { return sink_; }
  std::span<const FlowVertex> vertices() const { return vertices_; }
  std::span<const FlowEdge> edges() const { return edges_; }
  std::span<const std::size_t> out_edges(std::size_t v) const { return out_[v]; }
  std::span<const std::size_t> in_edges(std::size_t v) const { return in_[v]; }
  std::optional<std::size_t> find_edge(std::size_t from, std::size_t to) const;

  const std::optional<SystemLayout>& layout() const { return layout_; }
  void set_layout(SystemLayout layout) { layout_ = std::move(layout); }

  /// Human-readable vertex name: s, t, N1, x'3, x2, u1, u'1 (1-based).
  std::string vertex_name(std::size_t v) const;

 private:
  std::vector<FlowVertex> vertices_;
  std::vector<FlowEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::size_t source_ = SIZE_MAX;
  std::size_t sink_ = SIZE_MAX;
  std::optional<SystemLayout> layout_;
};

/// Integral edge flows, parallel to FlowNetwork::edges().
struct FlowVector {
  std::vector<std::int64_t> flow;
  friend bool operator==(const FlowVector&, const FlowVector&) = default;
};

/// Total flow leaving the source.
std::int64_t flow_value(const FlowNetwork& net, const FlowVector& f);
/// Capacity and conservation at every vertex other than s and t.
bool is_feasible(const FlowNetwork& net, const FlowVector& f);
/// Flow-weighted cost: sum of c(e) f(e).
Rational flow_cost(const FlowNetwork& net, const FlowVector& f);
/// Fixed-charge cost: sum of c(e) over edges with positive flow.
Rational distinct_edge_cost(const FlowNetwork& net, const FlowVector& f);

/// The two-block network of a structured system (costs zero).
/// `scc` must be the decomposition of the system's state digraph.
FlowNetwork build_flow_network(const StructuredSystem& sys, const SccDecomposition& scc);
/// Convenience overload that decomposes the state digraph itself.
FlowNetwork build_flow_network(const StructuredSystem& sys);

/// Copy of `net` with c(u'_j, t) = costs[j] and every other cost zero.
FlowNetwork augment_costs(const FlowNetwork& net, std::span<const Rational> costs);

/// Edge id of (u'_j, t) in a system network.
std::size_t input_sink_edge(const FlowNetwork& net, std::size_t j);

/// Dinic's algorithm; arcs are explored in edge-index order.
FlowVector max_flow(const FlowNetwork& net);

/// Cheapest integral flow of value exactly `required_value` (never cheaper to
/// send more, as costs are non-negative). Throws Error(Infeasible).
FlowVector min_cost_flow(const FlowNetwork& net, std::int64_t required_value);

}  // namespace structctl
