#include "structctl/dot_export.hpp"

#include <sstream>

#include "structctl/graph.hpp"
#include "structctl/matching.hpp"

namespace structctl {
namespace {

std::string state_name(std::size_t r) { return "x" + std::to_string(r + 1); }
std::string input_name(std::size_t j) { return "u" + std::to_string(j + 1); }

void emit_states(std::ostringstream& out, const StructuredSystem& sys) {
  const SccDecomposition scc = scc_decompose(build_state_digraph(sys));
  std::vector<int> ntl_label(scc.components.size(), 0);
  for (std::size_t i = 0; i < scc.non_top_linked.size(); ++i) ntl_label[scc.non_top_linked[i]] = static_cast<int>(i + 1);
  for (std::size_t c = 0; c < scc.components.size(); ++c) {
    const bool grouped = scc.components[c].size() > 1;
    if (grouped) out << "  subgraph cluster_scc" << c << " {\n    style=dashed;\n";
    if (grouped && ntl_label[c]) out << "    label=\"N" << ntl_label[c] << "\";\n";
    for (std::size_t r : scc.components[c]) {
      out << (grouped ? "    " : "  ") << state_name(r) << " [shape=circle";
      if (ntl_label[c]) out << ", style=filled, fillcolor=lightblue, tooltip=\"N" << ntl_label[c] << "\"";
      out << "];\n";
    }
    if (grouped) out << "  }\n";
  }
  for (const Entry& e : sys.a_bar.entries()) out << "  " << state_name(e.col) << " -> " << state_name(e.row) << ";\n";
}

const char* role_style(VertexRole role) {
  switch (role) {
    case VertexRole::Source: return "shape=doublecircle, style=filled, fillcolor=palegreen";
    case VertexRole::Sink: return "shape=doublecircle, style=filled, fillcolor=salmon";
    case VertexRole::Scc: return "shape=hexagon, style=filled, fillcolor=lightblue";
    case VertexRole::PrimedState: return "shape=circle, style=dashed";
    case VertexRole::State: return "shape=circle";
    case VertexRole::Input: return "shape=box";
    case VertexRole::PrimedInput: return "shape=box, style=dashed";
  }
  return "shape=circle";
}

}  // namespace

std::string dot_state_digraph(const StructuredSystem& sys) {
  validate_system(sys);
  std::ostringstream out;
  out << "digraph state {\n  rankdir=LR;\n";
  emit_states(out, sys);
  out << "}\n";
  return out.str();
}

std::string dot_system_digraph(const StructuredSystem& sys) {
  validate_system(sys);
  std::ostringstream out;
  out << "digraph system {\n  rankdir=LR;\n";
  emit_states(out, sys);
  for (std::size_t j = 0; j < sys.input_count(); ++j) {
    out << "  " << input_name(j) << " [shape=box, label=\"" << input_name(j) << " (" << sys.input_costs[j] << ")\"];\n";
  }
  for (const Entry& e : sys.b_bar.entries()) out << "  " << input_name(e.col) << " -> " << state_name(e.row) << ";\n";
  out << "}\n";
  return out.str();
}

std::string dot_bipartite(const StructuredSystem& sys) {
  validate_system(sys);
  const BipartiteGraph g = build_system_bipartite(sys, false);
  const std::size_t n = sys.state_count();
  auto left = [&](std::size_t l) { return l < n ? state_name(l) : input_name(l - n); };
  auto right = [&](std::size_t r) { return "\"x'" + std::to_string(r + 1) + "\""; };
  std::ostringstream out;
  out << "graph bipartite {\n  rankdir=LR;\n";
  out << "  subgraph cluster_left {\n    label=\"states and inputs\";\n";
  for (std::size_t l = 0; l < g.left_count; ++l) {
    out << "    " << left(l) << " [shape=" << (l < n ? "circle" : "box") << "];\n";
  }
  out << "  }\n  subgraph cluster_right {\n    label=\"primed states\";\n";
  for (std::size_t r = 0; r < g.right_count; ++r) out << "    " << right(r) << " [shape=circle, style=dashed];\n";
  out << "  }\n";
  for (const BipartiteEdge& e : g.edges) out << "  " << left(e.left) << " -- " << right(e.right) << ";\n";
  out << "}\n";
  return out.str();
}

std::string dot_flow_network(const FlowNetwork& net, const std::optional<FlowVector>& flow) {
  if (flow && flow->flow.size() != net.edges().size()) {
    throw Error(ErrorCode::DimensionMismatch, "flow vector does not match the network");
  }
  std::ostringstream out;
  out << "digraph flow {\n  rankdir=LR;\n";
  const auto vertices = net.vertices();
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    out << "  v" << v << " [label=\"" << net.vertex_name(v) << "\", " << role_style(vertices[v].role) << "];\n";
  }
  const auto edges = net.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::int64_t f = flow ? flow->flow[e] : 0;
    out << "  v" << edges[e].from << " -> v" << edges[e].to << " [label=\"" << f << '/' << edges[e].capacity << " @ "
        << edges[e].cost << "\"";
    if (f > 0) out << ", penwidth=2, color=blue";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace structctl
