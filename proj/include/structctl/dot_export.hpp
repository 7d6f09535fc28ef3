#pragma once

#include <optional>
#include <string>

#include "structctl/core.hpp"
#include "structctl/flow.hpp"

namespace structctl {

/// D(A): one node per state, SCC members grouped; non-top-linked SCCs filled.
std::string dot_state_digraph(const StructuredSystem& sys);
/// D(A, B): state digraph plus input nodes.
std::string dot_system_digraph(const StructuredSystem& sys);
/// B(A, B): left states and inputs, right primed states.
std::string dot_bipartite(const StructuredSystem& sys);
/// Edges labelled "flow/capacity @ cost"; flows are zero without `flow`.
std::string dot_flow_network(const FlowNetwork& net, const std::optional<FlowVector>& flow = std::nullopt);

}  // namespace structctl
