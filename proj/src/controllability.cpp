#include "structctl/controllability.hpp"

#include <algorithm>
#include <cassert>

#include "structctl/matching.hpp"

namespace structctl {

std::vector<std::size_t> inaccessible_sccs(const StructuredSystem& sys, const SccDecomposition& scc) {
  std::vector<std::size_t> out;
  for (std::size_t c : scc.non_top_linked) {
    const auto& members = scc.components[c];
    bool reached = std::any_of(members.begin(), members.end(),
                               [&](std::size_t r) { return !sys.b_bar.row(r).empty(); });
    if (!reached) out.push_back(c);
  }
  return out;
}

bool check_accessibility(const StructuredSystem& sys, const SccDecomposition& scc) {
  return inaccessible_sccs(sys, scc).empty();
}

bool check_no_dilation(const StructuredSystem& sys) {
  return max_matching(build_system_bipartite(sys, false)).size() == sys.state_count();
}

ControllabilityVerdict is_controllable_lin(const StructuredSystem& sys) {
  validate_system(sys);
  SccDecomposition scc = scc_decompose(build_state_digraph(sys));
  assert(scc.q() >= 1);
  ControllabilityVerdict v;
  v.method = DeciderMethod::Lin;
  v.n = sys.state_count();
  v.q = scc.q();
  v.uncovered_sccs = inaccessible_sccs(sys, scc);
  v.accessible = v.uncovered_sccs.empty();
  v.matching_size = max_matching(build_system_bipartite(sys, false)).size();
  v.dilation_free = v.matching_size == v.n;
  v.controllable = v.accessible && v.dilation_free;
  return v;
}

ControllabilityVerdict is_controllable_flow(const StructuredSystem& sys) {
  validate_system(sys);
  SccDecomposition scc = scc_decompose(build_state_digraph(sys));
  assert(scc.q() >= 1);
  FlowNetwork net = build_flow_network(sys, scc);
  FlowVector f = max_flow(net);
  ControllabilityVerdict v;
  v.method = DeciderMethod::Flow;
  v.n = sys.state_count();
  v.q = scc.q();
  v.max_flow_value = flow_value(net, f);
  v.controllable = v.max_flow_value >= static_cast<std::int64_t>(v.q + v.n);

  // Read the two conditions back off the flow: saturated (s, N_i) edges mean
  // covered SCCs, saturated (s, x'_k) edges form the matching.
  // The (u'_j, t) capacities never bind, so the blocks saturate independently.
  const auto& layout = *net.layout();
  for (std::size_t i = 0; i < layout.q; ++i) {
    auto e = net.find_edge(net.source(), layout.scc(i));
    if (f.flow[*e] == 0) v.uncovered_sccs.push_back(scc.non_top_linked[i]);
  }
  for (std::size_t k = 0; k < layout.n; ++k) {
    auto e = net.find_edge(net.source(), layout.primed_state(k));
    if (f.flow[*e] > 0) ++v.matching_size;
  }
  v.accessible = v.uncovered_sccs.empty();
  v.dilation_free = v.matching_size == v.n;
  return v;
}

InputSet input_support_of_flow(const FlowNetwork& net, const FlowVector& f) {
  if (!net.layout()) throw Error(ErrorCode::FlowTooSmall, "network was not built from a system");
  const auto& layout = *net.layout();
  if (!is_feasible(net, f)) throw Error(ErrorCode::FlowTooSmall, "flow is not feasible");
  const std::int64_t value = flow_value(net, f);
  const auto needed = static_cast<std::int64_t>(layout.q + layout.n);
  if (value < needed) {
    throw Error(ErrorCode::FlowTooSmall,
                "flow value " + std::to_string(value) + " is below q+n=" + std::to_string(needed));
  }
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < layout.m; ++j) {
    if (f.flow[input_sink_edge(net, j)] > 0) support.push_back(j);
  }
  return InputSet(std::move(support));
}

}  // namespace structctl
