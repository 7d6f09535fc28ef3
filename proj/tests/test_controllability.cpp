#include <doctest.h>

#include "structctl/controllability.hpp"
#include "structctl/oracle.hpp"
#include "structctl/selection.hpp"
#include "test_support.hpp"

using namespace structctl;
using testsupport::four_state;

TEST_CASE("four-state example: is controllable under both deciders") {
  auto sys = four_state();
  auto lin = is_controllable_lin(sys);
  auto flow = is_controllable_flow(sys);
  CHECK(lin.controllable);
  CHECK(flow.controllable);
  CHECK(lin.q == 2);
  CHECK(flow.max_flow_value == 6);
  CHECK(lin.matching_size == 4);
  CHECK(flow.matching_size == 4);
  CHECK(flow.uncovered_sccs.empty());
}

TEST_CASE("inaccessible versus dilated three-state systems") {
  auto a = testsupport::inaccessible();
  auto lin_a = is_controllable_lin(a);
  auto flow_a = is_controllable_flow(a);
  CHECK_FALSE(lin_a.controllable);
  CHECK_FALSE(flow_a.controllable);
  CHECK_FALSE(lin_a.accessible);
  CHECK_FALSE(flow_a.accessible);
  // The only non-top-linked SCC is {x1}, component 0.
  CHECK(lin_a.uncovered_sccs == std::vector<std::size_t>{0});
  CHECK(flow_a.uncovered_sccs == std::vector<std::size_t>{0});
  CHECK(flow_a.max_flow_value == 2);

  auto b = testsupport::dilated();
  auto lin_b = is_controllable_lin(b);
  auto flow_b = is_controllable_flow(b);
  CHECK(lin_b.accessible);
  CHECK(flow_b.accessible);
  CHECK_FALSE(lin_b.dilation_free);
  CHECK_FALSE(flow_b.dilation_free);
  CHECK(flow_b.max_flow_value == 3);
  CHECK(flow_b.max_flow_value < static_cast<std::int64_t>(flow_b.q + flow_b.n));
}

TEST_CASE("no inputs means not controllable") {
  auto sys = make_system(2, 0, {{0, 0}, {1, 0}, {1, 1}}, {});
  CHECK_FALSE(is_controllable_lin(sys).controllable);
  CHECK_FALSE(is_controllable_flow(sys).controllable);
}

TEST_CASE("input support of a flow") {
  auto sys = four_state();
  FlowNetwork net = build_flow_network(sys);
  FlowVector f = max_flow(net);
  InputSet support = input_support_of_flow(net, f);
  CHECK_FALSE(support.empty());
  CHECK(is_controllable_lin(restrict_inputs(sys, support).system).controllable);
  FlowVector zero{std::vector<std::int64_t>(net.edges().size(), 0)};
  try {
    input_support_of_flow(net, zero);
    FAIL("expected FlowTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FlowTooSmall);
  }
}

TEST_CASE("property: the two deciders agree, diagnostics included") {
  testsupport::Rng rng(314159);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 600; ++trial) {
    testsupport::RandomShape shape;
    shape.density_a = shape.density_b = std::vector<double>{0.1, 0.3, 0.6}[trial % 3];
    auto sys = testsupport::random_system(rng, shape);
    auto lin = is_controllable_lin(sys);
    auto flow = is_controllable_flow(sys);
    REQUIRE(lin.controllable == flow.controllable);
    CHECK(lin.accessible == flow.accessible);
    CHECK(lin.dilation_free == flow.dilation_free);
    CHECK(lin.uncovered_sccs == flow.uncovered_sccs);
    CHECK(lin.matching_size == flow.matching_size);
    CHECK(flow.max_flow_value == static_cast<std::int64_t>(flow.matching_size + flow.q - flow.uncovered_sccs.size()));
    (lin.controllable ? yes : no)++;
  }
  CHECK(yes > 50);
  CHECK(no > 50);
}

TEST_CASE("property: observability duality") {
  testsupport::Rng rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    testsupport::RandomShape shape;
    shape.density_a = 0.3;
    shape.density_b = 0.3;
    auto sys = testsupport::random_system(rng, shape);
    // Treat b_bar^T as an output matrix of the transposed state matrix.
    StructuredMatrix a = sys.a_bar.transposed();
    StructuredMatrix c = sys.b_bar.transposed();
    const bool controllable = is_controllable_lin(sys).controllable;
    if (controllable) {
      auto r = solve_min_cost_output_selection(a, c, sys.input_costs);
      CHECK(r.inputs == solve_minccis_approx(sys).inputs);
    } else {
      try {
        solve_min_cost_output_selection(a, c, sys.input_costs);
        FAIL("expected NotObservable");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotObservable);
      }
    }
  }
}

TEST_CASE("property: an extra input column never breaks controllability") {
  testsupport::Rng rng(161);
  for (int trial = 0; trial < 300; ++trial) {
    testsupport::RandomShape shape;
    shape.density_a = std::vector<double>{0.15, 0.3, 0.5}[trial % 3];
    shape.density_b = 0.3;
    auto sys = testsupport::random_system(rng, shape);
    const std::size_t n = sys.state_count(), m = sys.input_count();
    std::vector<Entry> b(sys.b_bar.entries().begin(), sys.b_bar.entries().end());
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.chance(0.3)) b.push_back({i, m});
    }
    auto costs = sys.input_costs;
    costs.emplace_back(1);
    StructuredSystem wider{sys.a_bar, StructuredMatrix(n, m + 1, std::move(b)), costs};
    if (is_controllable_lin(sys).controllable) {
      CHECK(is_controllable_lin(wider).controllable);
      CHECK(is_controllable_flow(wider).controllable);
    }
  }
}

TEST_CASE("property: the support of any large enough flow is a controllable input set") {
  testsupport::Rng rng(2020);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 25; ++trial) {
    testsupport::RandomShape shape;
    shape.n_max = 3;
    shape.m_max = 2;
    shape.density_a = 0.3;
    shape.density_b = 0.5;
    auto sys = testsupport::random_system(rng, shape);
    FlowNetwork net = build_flow_network(sys);
    if (net.edges().size() > 20 || !is_controllable_flow(sys).controllable) continue;
    ++checked;
    const auto required = static_cast<std::int64_t>(net.layout()->q + sys.state_count());
    for (const FlowVector& f : enumerate_feasible_flows(net, required, 20)) {
      CHECK(is_controllable_lin(restrict_inputs(sys, input_support_of_flow(net, f)).system).controllable);
    }
  }
  CHECK(checked >= 15);
}
