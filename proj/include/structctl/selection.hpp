#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "structctl/core.hpp"
#include "structctl/flow.hpp"
#include "structctl/graph.hpp"
#include "structctl/matching.hpp"

namespace structctl {

/// Approximation guarantee that applies to a system.
enum class BoundClass {
  Delta,          // general case: cost <= delta * optimum
  DeltaMinusOne,  // B(A) has a perfect matching
  Exact,          // state digraph is a single SCC
};

std::string_view to_string(BoundClass bound);

struct SccAssignment {
  std::size_t scc = 0;    // i, position in the non-top-linked list
  std::size_t input = 0;  // j
  friend bool operator==(const SccAssignment&, const SccAssignment&) = default;
};

/// One input per non-top-linked SCC, in SCC order.
struct SccCover {
  std::vector<SccAssignment> assignments;
  friend bool operator==(const SccCover&, const SccCover&) = default;
};

struct SelectionResult {
  InputSet inputs;
  /// Each selected input charged once.
  Rational total_cost;
  /// Feasible flow of value q+n on `network`; its (u'_j, t) support is `inputs`.
  FlowVector certificate;
  /// The cost-augmented network F(A, B, c) of the solved system.
  FlowNetwork network;
  std::int64_t delta = 0;
  BoundClass bound = BoundClass::Delta;
  std::string bound_rationale;

  /// Stage one: minimum-weight right-perfect matching of B(A, B).
  Matching matching;
  /// Stage two: greedy cheapest input per non-top-linked SCC.
  SccCover cover;
  /// Flow assembled from (matching, cover) and its flow-weighted cost, which
  /// equals the min-cost-flow optimum at value q+n.
  FlowVector lp_flow;
  Rational lp_objective;
  Rational matching_cost;
  Rational cover_cost;
  /// True when the single-SCC refinement rerouted the cover onto an input
  /// already used by the matching (certificate then differs from lp_flow).
  bool cover_rerouted = false;
};

/// Cheapest influencing input for every non-top-linked SCC. Ties go to an
/// input in `preselected` or picked for an earlier SCC, then to the lowest
/// index. Throws Error(UncoverableScc).
SccCover greedy_scc_cover(const StructuredSystem& sys, const SccDecomposition& scc, const FlowNetwork& net,
                          const InputSet& preselected = {});

/// Unit paths s->x'_k->(x_r->t | u_j->u'_j->t) for the matching and
/// s->N_i->u'_j->t for the cover; (u'_j, t) carries the sum.
/// `matching` uses the left numbering of B(A, B): states, then inputs.
/// Throws Error(InvalidMatching | InvalidCover).
FlowVector construct_flow_vector(const FlowNetwork& net, const Matching& matching, const SccCover& cover);

/// Largest in-degree over the u'_j vertices (0 when there are no inputs).
std::int64_t compute_delta(const FlowNetwork& net);

BoundClass classify_special_case(const StructuredSystem& sys);

/// Approximate minimum-cost input selection. Throws Error(NotControllable).
SelectionResult solve_minccis_approx(const StructuredSystem& sys);

/// Unit-cost variant; total_cost is the number of inputs selected.
SelectionResult solve_mincis_approx(const StructuredSystem& sys);

/// Output selection by duality: (A, C) observable iff (A^T, C^T) controllable.
/// `c_bar` is p x n; the returned `inputs` are output row indices.
/// Throws Error(NotObservable) when the full output set does not observe.
SelectionResult solve_min_cost_output_selection(const StructuredMatrix& a_bar, const StructuredMatrix& c_bar,
                                                std::span<const Rational> output_costs);

}  // namespace structctl
