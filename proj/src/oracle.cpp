#include "structctl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "structctl/controllability.hpp"

namespace structctl {

OracleResult brute_force_minccis(const StructuredSystem& sys, std::size_t max_inputs, bool all_optimal) {
  validate_system(sys);
  const std::size_t m = sys.input_count();
  if (m > max_inputs) {
    throw Error(ErrorCode::TooLarge,
                std::to_string(m) + " inputs exceed the enumeration limit of " + std::to_string(max_inputs));
  }
  if (m >= 63) throw Error(ErrorCode::TooLarge, "too many inputs to enumerate");

  struct Candidate {
    Rational cost;
    std::uint64_t mask;
  };
  std::vector<Candidate> subsets;
  subsets.reserve((std::uint64_t{1} << m) - 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    Rational cost;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask >> j & 1) cost += sys.input_costs[j];
    }
    subsets.push_back({cost, mask});
  }
  std::sort(subsets.begin(), subsets.end(), [](const Candidate& a, const Candidate& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (std::popcount(a.mask) != std::popcount(b.mask)) return std::popcount(a.mask) < std::popcount(b.mask);
    return a.mask < b.mask;
  });

  OracleResult result;
  bool found = false;
  for (const Candidate& c : subsets) {
    if (found && (c.cost > result.optimum_cost || !all_optimal)) break;
    ++result.subsets_examined;
    std::vector<std::size_t> indices;
    for (std::size_t j = 0; j < m; ++j) {
      if (c.mask >> j & 1) indices.push_back(j);
    }
    InputSet set(std::move(indices));
    if (!is_controllable_lin(restrict_inputs(sys, set).system).controllable) continue;
    found = true;
    result.optimum_cost = c.cost;
    result.optimal_sets.push_back(std::move(set));
  }
  if (!found) throw Error(ErrorCode::NotControllable, "no input subset makes the system controllable");
  std::sort(result.optimal_sets.begin(), result.optimal_sets.end());
  return result;
}

std::vector<FlowVector> enumerate_feasible_flows(const FlowNetwork& net, std::int64_t value, std::size_t edge_limit) {
  const auto edges = net.edges();
  if (edges.size() > edge_limit) {
    throw Error(ErrorCode::TooLarge, std::to_string(edges.size()) + " edges exceed the enumeration limit of " +
                                         std::to_string(edge_limit));
  }
  const std::size_t nv = net.vertices().size();
  const std::size_t s = net.source(), t = net.sink();
  // Per-vertex assigned flow and capacity of still-unassigned edges.
  std::vector<std::int64_t> in(nv, 0), out(nv, 0), in_rest(nv, 0), out_rest(nv, 0);
  for (const FlowEdge& e : edges) {
    out_rest[e.from] += e.capacity;
    in_rest[e.to] += e.capacity;
  }
  auto viable = [&](std::size_t v) {
    if (v == t) return true;
    if (v == s) return out[v] <= value && out[v] + out_rest[v] >= value;
    return in[v] <= out[v] + out_rest[v] && out[v] <= in[v] + in_rest[v];
  };

  std::vector<FlowVector> found;
  FlowVector current{std::vector<std::int64_t>(edges.size(), 0)};
  auto search = [&](auto&& self, std::size_t e) -> void {
    if (e == edges.size()) {
      found.push_back(current);
      return;
    }
    const FlowEdge& edge = edges[e];
    out_rest[edge.from] -= edge.capacity;
    in_rest[edge.to] -= edge.capacity;
    for (std::int64_t x = 0; x <= edge.capacity; ++x) {
      current.flow[e] = x;
      out[edge.from] += x;
      in[edge.to] += x;
      if (viable(edge.from) && viable(edge.to)) self(self, e + 1);
      out[edge.from] -= x;
      in[edge.to] -= x;
    }
    current.flow[e] = 0;
    out_rest[edge.from] += edge.capacity;
    in_rest[edge.to] += edge.capacity;
  };
  if (s < nv && viable(s)) search(search, 0);
  return found;
}

}  // namespace structctl
