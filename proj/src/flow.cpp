#include "structctl/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "structctl/detail/ssp.hpp"

namespace structctl {

std::size_t FlowNetwork::add_vertex(VertexRole role, std::size_t index) {
  std::size_t id = vertices_.size();
  if (role == VertexRole::Source) {
    if (source_ != SIZE_MAX) throw Error(ErrorCode::DimensionMismatch, "network already has a source");
    source_ = id;
  } else if (role == VertexRole::Sink) {
    if (sink_ != SIZE_MAX) throw Error(ErrorCode::DimensionMismatch, "network already has a sink");
    sink_ = id;
  }
  vertices_.push_back({role, index});
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

std::size_t FlowNetwork::add_edge(std::size_t from, std::size_t to, std::int64_t capacity, Rational cost) {
  if (from >= vertices_.size() || to >= vertices_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "edge endpoint is not a vertex");
  }
  if (capacity < 0) throw Error(ErrorCode::DimensionMismatch, "negative capacity");
  if (cost < Rational(0)) throw Error(ErrorCode::NegativeCost, "negative edge cost");
  std::size_t id = edges_.size();
  edges_.push_back({from, to, capacity, cost});
  out_[from].push_back(id);
  in_[to].push_back(id);
  return id;
}

std::optional<std::size_t> FlowNetwork::find_edge(std::size_t from, std::size_t to) const {
  if (from >= out_.size()) return std::nullopt;
  for (std::size_t e : out_[from]) {
    if (edges_[e].to == to) return e;
  }
  return std::nullopt;
}

std::string FlowNetwork::vertex_name(std::size_t v) const {
  const FlowVertex& fv = vertices_.at(v);
  const std::string k = std::to_string(fv.index + 1);
  switch (fv.role) {
    case VertexRole::Source: return "s";
    case VertexRole::Sink: return "t";
    case VertexRole::Scc: return "N" + k;
    case VertexRole::PrimedState: return "x'" + k;
    case VertexRole::State: return "x" + k;
    case VertexRole::Input: return "u" + k;
    case VertexRole::PrimedInput: return "u'" + k;
  }
  return "?";
}

std::int64_t flow_value(const FlowNetwork& net, const FlowVector& f) {
  std::int64_t total = 0;
  for (std::size_t e : net.out_edges(net.source())) total += f.flow.at(e);
  return total;
}

bool is_feasible(const FlowNetwork& net, const FlowVector& f) {
  const auto edges = net.edges();
  if (f.flow.size() != edges.size()) return false;
  std::vector<std::int64_t> balance(net.vertices().size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (f.flow[e] < 0 || f.flow[e] > edges[e].capacity) return false;
    balance[edges[e].from] -= f.flow[e];
    balance[edges[e].to] += f.flow[e];
  }
  for (std::size_t v = 0; v < balance.size(); ++v) {
    if (v != net.source() && v != net.sink() && balance[v] != 0) return false;
  }
  return true;
}

Rational flow_cost(const FlowNetwork& net, const FlowVector& f) {
  Rational total;
  const auto edges = net.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (f.flow[e] != 0) total += edges[e].cost * Rational(f.flow[e]);
  }
  return total;
}

Rational distinct_edge_cost(const FlowNetwork& net, const FlowVector& f) {
  Rational total;
  const auto edges = net.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (f.flow[e] > 0) total += edges[e].cost;
  }
  return total;
}

FlowNetwork build_flow_network(const StructuredSystem& sys, const SccDecomposition& scc) {
  validate_system(sys);
  const std::size_t n = sys.state_count(), m = sys.input_count(), q = scc.q();
  if (scc.component_of.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "SCC decomposition does not match the state count");
  }
  SystemLayout layout{n, m, q, {}};
  for (std::size_t c : scc.non_top_linked) layout.scc_members.push_back(scc.components[c]);

  FlowNetwork net;
  net.add_vertex(VertexRole::Source);
  net.add_vertex(VertexRole::Sink);
  for (std::size_t i = 0; i < q; ++i) net.add_vertex(VertexRole::Scc, i);
  for (std::size_t k = 0; k < n; ++k) net.add_vertex(VertexRole::PrimedState, k);
  for (std::size_t r = 0; r < n; ++r) net.add_vertex(VertexRole::State, r);
  for (std::size_t j = 0; j < m; ++j) net.add_vertex(VertexRole::Input, j);
  for (std::size_t j = 0; j < m; ++j) net.add_vertex(VertexRole::PrimedInput, j);

  const std::int64_t unit = 1;
  for (std::size_t i = 0; i < q; ++i) net.add_edge(net.source(), layout.scc(i), unit);
  for (std::size_t k = 0; k < n; ++k) net.add_edge(net.source(), layout.primed_state(k), unit);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      bool touches = std::any_of(layout.scc_members[i].begin(), layout.scc_members[i].end(),
                                 [&](std::size_t r) { return sys.b_bar.contains(r, j); });
      if (touches) net.add_edge(layout.scc(i), layout.primed_input(j), unit);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r : sys.a_bar.row(k)) net.add_edge(layout.primed_state(k), layout.state(r), unit);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j : sys.b_bar.row(k)) net.add_edge(layout.primed_state(k), layout.input(j), unit);
  }
  for (std::size_t j = 0; j < m; ++j) net.add_edge(layout.input(j), layout.primed_input(j), unit);
  for (std::size_t j = 0; j < m; ++j) {
    net.add_edge(layout.primed_input(j), net.sink(), static_cast<std::int64_t>(n) + 1);
  }
  for (std::size_t r = 0; r < n; ++r) net.add_edge(layout.state(r), net.sink(), unit);
  net.set_layout(std::move(layout));
  return net;
}

FlowNetwork build_flow_network(const StructuredSystem& sys) {
  return build_flow_network(sys, scc_decompose(build_state_digraph(sys)));
}

std::size_t input_sink_edge(const FlowNetwork& net, std::size_t j) {
  if (!net.layout() || j >= net.layout()->m) {
    throw Error(ErrorCode::IndexOutOfRange, "no (u'_j, t) edge for input " + std::to_string(j));
  }
  auto e = net.find_edge(net.layout()->primed_input(j), net.sink());
  if (!e) throw Error(ErrorCode::IndexOutOfRange, "missing (u'_j, t) edge");
  return *e;
}

FlowNetwork augment_costs(const FlowNetwork& net, std::span<const Rational> costs) {
  if (!net.layout() || costs.size() != net.layout()->m) {
    throw Error(ErrorCode::DimensionMismatch, "cost vector length does not match the number of inputs");
  }
  FlowNetwork out = net;
  for (std::size_t e = 0; e < out.edges().size(); ++e) out.set_cost(e, Rational(0));
  for (std::size_t j = 0; j < costs.size(); ++j) {
    if (costs[j] < Rational(0)) throw Error(ErrorCode::NegativeCost, "negative input cost");
    out.set_cost(input_sink_edge(out, j), costs[j]);
  }
  return out;
}

FlowVector max_flow(const FlowNetwork& net) {
  struct Arc {
    std::size_t to;
    std::int64_t residual;
  };
  const std::size_t nv = net.vertices().size();
  const auto edges = net.edges();
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out(nv);
  for (const FlowEdge& e : edges) {
    out[e.from].push_back(arcs.size());
    arcs.push_back({e.to, e.capacity});
    out[e.to].push_back(arcs.size());
    arcs.push_back({e.from, 0});
  }
  FlowVector result{std::vector<std::int64_t>(edges.size(), 0)};
  if (nv == 0 || net.source() >= nv || net.sink() >= nv) return result;
  const std::size_t s = net.source(), t = net.sink();
  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> level(nv), next(nv);

  auto bfs = [&]() {
    std::fill(level.begin(), level.end(), kUnreached);
    std::deque<std::size_t> queue{s};
    level[s] = 0;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t a : out[v]) {
        if (arcs[a].residual > 0 && level[arcs[a].to] == kUnreached) {
          level[arcs[a].to] = level[v] + 1;
          queue.push_back(arcs[a].to);
        }
      }
    }
    return level[t] != kUnreached;
  };

  // Blocking flow by iterative DFS with current-arc pointers.
  auto push_path = [&]() -> std::int64_t {
    std::vector<std::size_t> stack;  // arcs on the current path
    std::size_t v = s;
    while (true) {
      if (v == t) {
        std::int64_t push = std::numeric_limits<std::int64_t>::max();
        for (std::size_t a : stack) push = std::min(push, arcs[a].residual);
        for (std::size_t a : stack) {
          arcs[a].residual -= push;
          arcs[a ^ 1].residual += push;
        }
        return push;
      }
      bool advanced = false;
      for (; next[v] < out[v].size(); ++next[v]) {
        const Arc& arc = arcs[out[v][next[v]]];
        if (arc.residual > 0 && level[arc.to] == level[v] + 1) {
          stack.push_back(out[v][next[v]]);
          v = arc.to;
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      if (stack.empty()) return 0;
      level[v] = kUnreached;
      std::size_t back = stack.back();
      stack.pop_back();
      v = arcs[back ^ 1].to;
      ++next[v];
    }
  };

  while (bfs()) {
    std::fill(next.begin(), next.end(), 0);
    while (push_path() > 0) {
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e) result.flow[e] = arcs[2 * e + 1].residual;
  return result;
}

FlowVector min_cost_flow(const FlowNetwork& net, std::int64_t required_value) {
  const auto edges = net.edges();
  FlowVector result{std::vector<std::int64_t>(edges.size(), 0)};
  if (required_value <= 0) return result;
  detail::ResidualNetwork<Rational> residual(net.vertices().size());
  for (const FlowEdge& e : edges) residual.add_arc(e.from, e.to, e.capacity, e.cost);
  std::int64_t sent = residual.augment(net.source(), net.sink(), required_value);
  if (sent < required_value) {
    throw Error(ErrorCode::Infeasible, "maximum flow " + std::to_string(sent) + " is below the required value " +
                                          std::to_string(required_value));
  }
  for (std::size_t e = 0; e < edges.size(); ++e) result.flow[e] = residual.flow(e);
  return result;
}

}  // namespace structctl
