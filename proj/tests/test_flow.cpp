#include <doctest.h>

#include <algorithm>

#include "structctl/flow.hpp"
#include "structctl/oracle.hpp"
#include "test_support.hpp"

using namespace structctl;
using testsupport::four_state;

namespace {

std::size_t count_role(const FlowNetwork& net, VertexRole role) {
  std::size_t k = 0;
  for (const FlowVertex& v : net.vertices()) k += v.role == role;
  return k;
}

}  // namespace

TEST_CASE("four-state example: network layout") {
  FlowNetwork net = build_flow_network(four_state());
  CHECK(net.vertices().size() == 18);
  CHECK(net.edges().size() == 33);
  CHECK(count_role(net, VertexRole::Scc) == 2);
  CHECK(count_role(net, VertexRole::PrimedState) == 4);
  CHECK(count_role(net, VertexRole::State) == 4);
  CHECK(count_role(net, VertexRole::Input) == 3);
  CHECK(count_role(net, VertexRole::PrimedInput) == 3);
  const SystemLayout& layout = *net.layout();
  CHECK(net.vertex_name(net.source()) == "s");
  CHECK(net.vertex_name(layout.scc(1)) == "N2");
  CHECK(net.vertex_name(layout.primed_state(2)) == "x'3");
  CHECK(net.vertex_name(layout.primed_input(0)) == "u'1");
  // N1 = {x2} is touched by u2 and u3; N2 = {x4} by u3 only.
  CHECK(net.find_edge(layout.scc(0), layout.primed_input(1)));
  CHECK(net.find_edge(layout.scc(0), layout.primed_input(2)));
  CHECK_FALSE(net.find_edge(layout.scc(0), layout.primed_input(0)));
  CHECK(net.in_edges(layout.primed_input(2)).size() == 3);
  // (u'_j, t) never limits the flow.
  CHECK(net.edges()[input_sink_edge(net, 0)].capacity == 5);
  CHECK(max_flow(net).flow.size() == 33);
  CHECK(flow_value(net, max_flow(net)) == 6);
}

TEST_CASE("four-state example: min-cost flow with costs (1,1,10)") {
  auto sys = four_state();
  FlowNetwork net = augment_costs(build_flow_network(sys), sys.input_costs);
  CHECK(net.edges()[input_sink_edge(net, 2)].cost == Rational(10));
  FlowVector f = min_cost_flow(net, 6);
  CHECK(is_feasible(net, f));
  CHECK(flow_value(net, f) == 6);
  CHECK(flow_cost(net, f) == Rational(12));
  CHECK(testsupport::cycle_cancel_min_cost(net, 6) == Rational(12));
  CHECK_THROWS_AS(min_cost_flow(net, 7), Error);
}

TEST_CASE("flow bookkeeping helpers") {
  FlowNetwork net;
  auto s = net.add_vertex(VertexRole::Source);
  auto t = net.add_vertex(VertexRole::Sink);
  auto a = net.add_vertex(VertexRole::State, 0);
  auto b = net.add_vertex(VertexRole::State, 1);
  net.add_edge(s, a, 2, Rational(1));
  net.add_edge(s, b, 1, Rational(3));
  net.add_edge(a, t, 1, Rational(1, 2));
  net.add_edge(a, b, 1);
  net.add_edge(b, t, 2, Rational(2));
  CHECK_THROWS_AS(net.add_edge(s, a, 1, Rational(-1)), Error);
  CHECK_THROWS_AS(net.add_vertex(VertexRole::Source), Error);

  FlowVector f{{2, 0, 1, 1, 1}};
  CHECK(is_feasible(net, f));
  CHECK(flow_value(net, f) == 2);
  CHECK(flow_cost(net, f) == Rational(9, 2));
  CHECK(distinct_edge_cost(net, f) == Rational(7, 2));
  CHECK_FALSE(is_feasible(net, FlowVector{{2, 0, 1, 0, 1}}));
  CHECK_FALSE(is_feasible(net, FlowVector{{3, 0, 1, 1, 1}}));

  CHECK(flow_value(net, max_flow(net)) == 3);
  auto all = enumerate_feasible_flows(net, 2);
  CHECK(all.size() == 3);
  for (const auto& g : all) {
    CHECK(is_feasible(net, g));
    CHECK(flow_value(net, g) == 2);
  }
  CHECK(enumerate_feasible_flows(net, 4).empty());
  CHECK_THROWS_AS(enumerate_feasible_flows(net, 1, 4), Error);
}

TEST_CASE("property: max flow and min-cost flow agree with independent references") {
  testsupport::Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    testsupport::RandomShape shape;
    shape.n_max = 7;
    shape.m_max = 4;
    shape.density_a = shape.density_b = std::vector<double>{0.15, 0.3, 0.5}[trial % 3];
    shape.cost_min = 0;
    shape.cost_max = 10;
    auto sys = testsupport::random_system(rng, shape);
    FlowNetwork net = augment_costs(build_flow_network(sys), sys.input_costs);
    FlowVector mf = max_flow(net);
    CHECK(is_feasible(net, mf));
    const std::int64_t value = flow_value(net, mf);
    CHECK_FALSE(testsupport::cycle_cancel_min_cost(net, value + 1));
    for (std::int64_t v : {value, value / 2}) {
      FlowVector f = min_cost_flow(net, v);
      CHECK(is_feasible(net, f));
      CHECK(flow_value(net, f) == v);
      CHECK(flow_cost(net, f) == testsupport::cycle_cancel_min_cost(net, v));
    }
  }
}

TEST_CASE("property: enumeration agrees with max flow on tiny networks") {
  testsupport::Rng rng(5);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    testsupport::RandomShape shape;
    shape.n_max = 3;
    shape.m_max = 2;
    shape.density_a = 0.3;
    shape.density_b = 0.4;
    auto sys = testsupport::random_system(rng, shape);
    FlowNetwork net = build_flow_network(sys);
    if (net.edges().size() > 20) continue;
    ++checked;
    const std::int64_t value = flow_value(net, max_flow(net));
    auto at_max = enumerate_feasible_flows(net, value, 20);
    CHECK_FALSE(at_max.empty());
    CHECK(enumerate_feasible_flows(net, value + 1, 20).empty());
  }
  CHECK(checked > 50);
}

TEST_CASE("four-state example: flow edge cases") {
  auto sys = four_state();
  FlowNetwork net = augment_costs(build_flow_network(sys), sys.input_costs);
  std::size_t priced = 0;
  Rational total;
  for (const FlowEdge& e : net.edges()) {
    if (e.cost != Rational(0)) ++priced;
    total += e.cost;
  }
  CHECK(priced == 3);
  CHECK(total == Rational(12));

  FlowVector zero = min_cost_flow(net, 0);
  CHECK(std::all_of(zero.flow.begin(), zero.flow.end(), [](std::int64_t x) { return x == 0; }));

  FlowNetwork free = augment_costs(build_flow_network(sys), std::vector<Rational>(3, Rational(0)));
  CHECK(flow_cost(free, min_cost_flow(free, 6)) == Rational(0));

  auto only_u3 = restrict_inputs(sys, InputSet({2})).system;
  CHECK(flow_value(build_flow_network(only_u3), max_flow(build_flow_network(only_u3))) == 6);
}

TEST_CASE("single state with one zero-cost input") {
  auto sys = make_system(1, 1, {}, {{0, 0}}, {Rational(0)});
  FlowNetwork net = augment_costs(build_flow_network(sys), sys.input_costs);
  CHECK(flow_value(net, max_flow(net)) == 2);
  CHECK(flow_cost(net, min_cost_flow(net, 2)) == Rational(0));
}

TEST_CASE("property: min-cost flow is no dearer than any enumerated flow") {
  testsupport::Rng rng(404);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 40; ++trial) {
    testsupport::RandomShape shape;
    shape.n_max = 3;
    shape.m_max = 2;
    shape.density_a = 0.3;
    shape.density_b = 0.4;
    shape.cost_min = 0;
    shape.cost_max = 6;
    auto sys = testsupport::random_system(rng, shape);
    FlowNetwork net = augment_costs(build_flow_network(sys), sys.input_costs);
    if (net.edges().size() > 20) continue;
    ++checked;
    const std::int64_t value = flow_value(net, max_flow(net));
    const std::int64_t n = static_cast<std::int64_t>(sys.state_count());
    CHECK(value <= static_cast<std::int64_t>(net.layout()->q) + n);
    const Rational best = flow_cost(net, min_cost_flow(net, value));
    for (const FlowVector& f : enumerate_feasible_flows(net, value, 20)) CHECK(best <= flow_cost(net, f));
  }
  CHECK(checked >= 30);
}
