#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "structctl/core.hpp"
#include "structctl/flow.hpp"
#include "structctl/graph.hpp"

namespace structctl {

enum class DeciderMethod { Lin, Flow };

struct ControllabilityVerdict {
  bool controllable = false;
  bool accessible = false;
  bool dilation_free = false;
  std::int64_t max_flow_value = 0;
  std::size_t q = 0;
  std::size_t n = 0;
  DeciderMethod method = DeciderMethod::Lin;
  /// Non-top-linked SCCs (component ids) with no input attached.
  std::vector<std::size_t> uncovered_sccs;
  /// Size of a maximum matching of B(A, B).
  std::size_t matching_size = 0;
};

/// Non-top-linked components of `scc` that no input column touches.
std::vector<std::size_t> inaccessible_sccs(const StructuredSystem& sys, const SccDecomposition& scc);

/// Every non-top-linked SCC has some state driven directly by an input.
bool check_accessibility(const StructuredSystem& sys, const SccDecomposition& scc);

/// B(A, B) has a matching covering all primed states.
bool check_no_dilation(const StructuredSystem& sys);

/// Classical decider: accessibility and absence of dilations.
ControllabilityVerdict is_controllable_lin(const StructuredSystem& sys);

/// Flow decider: max flow on the two-block network reaches q + n.
ControllabilityVerdict is_controllable_flow(const StructuredSystem& sys);

/// W_f = { j : f(u'_j, t) > 0 }. Throws Error(FlowTooSmall) unless f is a
/// feasible flow of value at least q + n on a system network.
InputSet input_support_of_flow(const FlowNetwork& net, const FlowVector& f);

}  // namespace structctl
