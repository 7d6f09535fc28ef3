#include "structctl/selection.hpp"

#include <algorithm>
#include <cassert>

#include "structctl/controllability.hpp"

namespace structctl {
namespace {

const SystemLayout& require_layout(const FlowNetwork& net) {
  if (!net.layout()) throw Error(ErrorCode::DimensionMismatch, "network was not built from a system");
  return *net.layout();
}

// Inputs j with an edge (N_i, u'_j), ascending.
std::vector<std::size_t> cover_candidates(const FlowNetwork& net, std::size_t i) {
  const SystemLayout& layout = require_layout(net);
  std::vector<std::size_t> out;
  for (std::size_t e : net.out_edges(layout.scc(i))) {
    const FlowVertex& v = net.vertices()[net.edges()[e].to];
    if (v.role == VertexRole::PrimedInput) out.push_back(v.index);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// For every input, the number of SCCs for which it is a cheapest cover
// candidate. Used to break ties in the matching stage.
std::vector<std::int64_t> cover_affinity(const StructuredSystem& sys, const FlowNetwork& net) {
  const SystemLayout& layout = require_layout(net);
  std::vector<std::int64_t> bonus(layout.n + layout.m, 0);
  for (std::size_t i = 0; i < layout.q; ++i) {
    auto candidates = cover_candidates(net, i);
    if (candidates.empty()) continue;
    Rational best = sys.input_costs[candidates.front()];
    for (std::size_t j : candidates) best = std::min(best, sys.input_costs[j]);
    for (std::size_t j : candidates) {
      if (sys.input_costs[j] == best) ++bonus[layout.n + j];
    }
  }
  return bonus;
}

InputSet matched_inputs(const Matching& matching, std::size_t n) {
  std::vector<std::size_t> out;
  for (const auto& [left, right] : matching.pairs) {
    if (left >= n) out.push_back(left - n);
  }
  return InputSet(std::move(out));
}

}  // namespace

std::string_view to_string(BoundClass bound) {
  switch (bound) {
    case BoundClass::Delta: return "delta";
    case BoundClass::DeltaMinusOne: return "delta_minus_one";
    case BoundClass::Exact: return "exact";
  }
  return "delta";
}

SccCover greedy_scc_cover(const StructuredSystem& sys, const SccDecomposition& scc, const FlowNetwork& net,
                          const InputSet& preselected) {
  const SystemLayout& layout = require_layout(net);
  if (layout.q != scc.q()) throw Error(ErrorCode::DimensionMismatch, "network and decomposition disagree on q");
  std::vector<bool> chosen(layout.m, false);
  for (std::size_t j : preselected.indices()) {
    if (j < layout.m) chosen[j] = true;
  }
  SccCover cover;
  for (std::size_t i = 0; i < layout.q; ++i) {
    auto candidates = cover_candidates(net, i);
    if (candidates.empty()) {
      throw Error(ErrorCode::UncoverableScc, "no input influences SCC N" + std::to_string(i + 1));
    }
    std::size_t best = candidates.front();
    for (std::size_t j : candidates) {
      const Rational& cj = sys.input_costs[j];
      const Rational& cb = sys.input_costs[best];
      if (cj < cb || (cj == cb && chosen[j] && !chosen[best])) best = j;
    }
    chosen[best] = true;
    cover.assignments.push_back({i, best});
  }
  return cover;
}

FlowVector construct_flow_vector(const FlowNetwork& net, const Matching& matching, const SccCover& cover) {
  const SystemLayout& layout = require_layout(net);
  FlowVector f{std::vector<std::int64_t>(net.edges().size(), 0)};
  auto bump = [&](std::size_t from, std::size_t to, ErrorCode code) {
    auto e = net.find_edge(from, to);
    if (!e) {
      throw Error(code, "(" + net.vertex_name(from) + ", " + net.vertex_name(to) + ") is not an edge of the network");
    }
    f.flow[*e] += 1;
  };

  if (matching.size() != layout.n) {
    throw Error(ErrorCode::InvalidMatching, "matching does not saturate every primed state");
  }
  std::vector<bool> right_used(layout.n, false), left_used(layout.n + layout.m, false);
  for (const auto& [left, right] : matching.pairs) {
    if (right >= layout.n || left >= layout.n + layout.m || right_used[right] || left_used[left]) {
      throw Error(ErrorCode::InvalidMatching, "matching repeats or exceeds a vertex");
    }
    right_used[right] = left_used[left] = true;
    bump(net.source(), layout.primed_state(right), ErrorCode::InvalidMatching);
    if (left < layout.n) {
      bump(layout.primed_state(right), layout.state(left), ErrorCode::InvalidMatching);
      bump(layout.state(left), net.sink(), ErrorCode::InvalidMatching);
    } else {
      const std::size_t j = left - layout.n;
      bump(layout.primed_state(right), layout.input(j), ErrorCode::InvalidMatching);
      bump(layout.input(j), layout.primed_input(j), ErrorCode::InvalidMatching);
      bump(layout.primed_input(j), net.sink(), ErrorCode::InvalidMatching);
    }
  }

  // The cover has one assignment per SCC (q of them).
  if (cover.assignments.size() != layout.q) {
    throw Error(ErrorCode::InvalidCover, "cover must assign exactly one input to each non-top-linked SCC");
  }
  std::vector<bool> scc_used(layout.q, false);
  for (const SccAssignment& a : cover.assignments) {
    if (a.scc >= layout.q || a.input >= layout.m || scc_used[a.scc]) {
      throw Error(ErrorCode::InvalidCover, "cover repeats or exceeds an SCC or input");
    }
    scc_used[a.scc] = true;
    bump(net.source(), layout.scc(a.scc), ErrorCode::InvalidCover);
    bump(layout.scc(a.scc), layout.primed_input(a.input), ErrorCode::InvalidCover);
    bump(layout.primed_input(a.input), net.sink(), ErrorCode::InvalidCover);
  }
  assert(is_feasible(net, f));
  return f;
}

std::int64_t compute_delta(const FlowNetwork& net) {
  const SystemLayout& layout = require_layout(net);
  std::int64_t delta = 0;
  for (std::size_t j = 0; j < layout.m; ++j) {
    delta = std::max(delta, static_cast<std::int64_t>(net.in_edges(layout.primed_input(j)).size()));
  }
  assert(layout.m == 0 || (delta >= 1 && delta <= static_cast<std::int64_t>(layout.q) + 1));
  return delta;
}

BoundClass classify_special_case(const StructuredSystem& sys) {
  validate_system(sys);
  if (scc_decompose(build_state_digraph(sys)).irreducible()) return BoundClass::Exact;
  if (max_matching(build_state_bipartite(sys)).size() == sys.state_count()) return BoundClass::DeltaMinusOne;
  return BoundClass::Delta;
}

SelectionResult solve_minccis_approx(const StructuredSystem& sys) {
  validate_system(sys);
  const std::size_t n = sys.state_count();
  SccDecomposition scc = scc_decompose(build_state_digraph(sys));
  assert(scc.q() >= 1);
  FlowNetwork net = augment_costs(build_flow_network(sys, scc), sys.input_costs);
  const FlowVector max = max_flow(net);
  const auto required = static_cast<std::int64_t>(scc.q() + n);
  if (flow_value(net, max) < required) {
    throw Error(ErrorCode::NotControllable, "maximum flow " + std::to_string(flow_value(net, max)) +
                                               " is below q+n=" + std::to_string(required));
  }

  SelectionResult result;
  BipartiteGraph bip = build_system_bipartite(sys, true);
  result.matching = min_weight_perfect_matching(bip, MatchingPreferences{cover_affinity(sys, net)});
  const InputSet from_matching = matched_inputs(result.matching, n);
  result.cover = greedy_scc_cover(sys, scc, net, from_matching);
  result.lp_flow = construct_flow_vector(net, result.matching, result.cover);
  result.lp_objective = flow_cost(net, result.lp_flow);
  result.matching_cost = matching_weight(bip, result.matching);
  for (const SccAssignment& a : result.cover.assignments) result.cover_cost += sys.input_costs[a.input];
  assert(result.lp_objective == result.matching_cost + result.cover_cost);

  result.bound = classify_special_case(sys);
  result.delta = compute_delta(net);
  SccCover certificate_cover = result.cover;
  switch (result.bound) {
    case BoundClass::Exact:
      result.bound_rationale =
          "state digraph is irreducible: any input used by the matching also reaches the single SCC, "
          "so the selection is optimal";
      // With one SCC holding every state, any matched input already touches
      // it; routing N_1 there charges nothing extra.
      if (!from_matching.empty()) {
        std::size_t best = from_matching.indices().front();
        for (std::size_t j : from_matching.indices()) {
          if (sys.input_costs[j] < sys.input_costs[best]) best = j;
        }
        if (best != certificate_cover.assignments.front().input) {
          certificate_cover.assignments.front().input = best;
          result.cover_rerouted = true;
        }
      }
      break;
    case BoundClass::DeltaMinusOne:
      result.bound_rationale =
          "B(A) has a perfect matching: edges (u_j, u'_j) carry no cost-bearing flow, "
          "so cost <= (delta-1) * optimum";
      break;
    case BoundClass::Delta:
      result.bound_rationale = "general case: cost <= delta * optimum";
      break;
  }
  result.certificate =
      result.cover_rerouted ? construct_flow_vector(net, result.matching, certificate_cover) : result.lp_flow;
  result.inputs = input_support_of_flow(net, result.certificate);
  result.total_cost = input_set_cost(sys, result.inputs);
  assert(result.total_cost == distinct_edge_cost(net, result.certificate));
  assert(flow_value(net, result.certificate) == required);
  result.network = std::move(net);
  return result;
}

SelectionResult solve_mincis_approx(const StructuredSystem& sys) {
  validate_system(sys);
  StructuredSystem unit = sys;
  unit.input_costs.assign(sys.input_count(), Rational(1));
  return solve_minccis_approx(unit);
}

SelectionResult solve_min_cost_output_selection(const StructuredMatrix& a_bar, const StructuredMatrix& c_bar,
                                                std::span<const Rational> output_costs) {
  if (c_bar.cols() != a_bar.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "output matrix must have one column per state");
  }
  if (output_costs.size() != c_bar.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "one cost per output row is required");
  }
  StructuredSystem dual{a_bar.transposed(), c_bar.transposed(),
                        std::vector<Rational>(output_costs.begin(), output_costs.end())};
  try {
    return solve_minccis_approx(dual);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotControllable) {
      throw Error(ErrorCode::NotObservable, "the full output set does not make the system observable");
    }
    throw;
  }
}

}  // namespace structctl
