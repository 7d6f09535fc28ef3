#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "structctl/core.hpp"
#include "structctl/flow.hpp"

namespace structctl {

struct OracleResult {
  Rational optimum_cost;
  /// Every cost-minimal controllable input set, in ascending order.
  std::vector<InputSet> optimal_sets;
  std::size_t subsets_examined = 0;
};

/// Exact minimum-cost input selection by enumerating nonempty input subsets
/// in nondecreasing cost order, each checked with the classical decider.
/// With `all_optimal` false the scan stops at the first feasible subset.
/// Throws Error(TooLarge) when m > max_inputs and Error(NotControllable) when
/// no subset works.
OracleResult brute_force_minccis(const StructuredSystem& sys, std::size_t max_inputs = 16, bool all_optimal = true);

/// Every integral feasible flow whose value (flow out of s) equals `value`,
/// found by bounded backtracking over the edges. Throws Error(TooLarge) when
/// the network has more than `edge_limit` edges.
std::vector<FlowVector> enumerate_feasible_flows(const FlowNetwork& net, std::int64_t value,
                                                 std::size_t edge_limit = 24);

}  // namespace structctl
