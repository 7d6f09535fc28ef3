#include <doctest.h>

#include "structctl/matching.hpp"
#include "test_support.hpp"

using namespace structctl;
using testsupport::four_state;

TEST_CASE("four-state example: bipartite graphs") {
  auto sys = four_state();
  BipartiteGraph ba = build_state_bipartite(sys);
  CHECK(ba.edges.size() == 7);
  CHECK(max_matching(ba).size() == 3);
  BipartiteGraph bab = build_system_bipartite(sys, true);
  CHECK(bab.left_count == 7);
  CHECK(bab.edges.size() == 14);
  CHECK(max_matching(bab).size() == 4);
  CHECK(is_valid_matching(bab, max_matching(bab)));
}

TEST_CASE("four-state example: minimum-weight matching with costs (1,1,10)") {
  auto sys = four_state();
  BipartiteGraph g = build_system_bipartite(sys, true);
  Matching plain = min_weight_perfect_matching(g);
  CHECK(matching_weight(g, plain) == Rational(1));
  CHECK(is_valid_matching(g, plain));
  // Several weight-1 matchings exist. Left indices 4, 5, 6 are u1, u2, u3.
  // The lexicographic rule alone puts u1 on x'3; a bonus on u2 and u3 (the
  // cheapest SCC covers) moves x'3 to u2.
  using P = std::pair<std::size_t, std::size_t>;
  CHECK(plain.pairs == std::vector<P>{{0, 0}, {1, 1}, {4, 2}, {3, 3}});
  Matching m = min_weight_perfect_matching(g, MatchingPreferences{{0, 0, 0, 0, 0, 1, 1}});
  CHECK(matching_weight(g, m) == Rational(1));
  CHECK(m.pairs == std::vector<P>{{0, 0}, {1, 1}, {5, 2}, {3, 3}});
}

TEST_CASE("tie-break: fewer inputs, then bonus, then lexicographic partners") {
  // One state with a self-loop and two inputs on it, all zero cost.
  auto sys = make_system(1, 2, {{0, 0}}, {{0, 0}, {0, 1}}, {Rational(0), Rational(0)});
  BipartiteGraph g = build_system_bipartite(sys, true);
  using P = std::pair<std::size_t, std::size_t>;
  CHECK(min_weight_perfect_matching(g).pairs == std::vector<P>{{0, 0}});

  auto no_loop = make_system(1, 2, {}, {{0, 0}, {0, 1}}, {Rational(0), Rational(0)});
  BipartiteGraph h = build_system_bipartite(no_loop, true);
  CHECK(min_weight_perfect_matching(h).pairs == std::vector<P>{{1, 0}});
  MatchingPreferences prefs{{0, 0, 1}};
  CHECK(min_weight_perfect_matching(h, prefs).pairs == std::vector<P>{{2, 0}});
}

TEST_CASE("no right-perfect matching is reported") {
  auto sys = make_system(2, 0, {{0, 0}, {1, 0}}, {});
  try {
    min_weight_perfect_matching(build_system_bipartite(sys, true));
    FAIL("expected Infeasible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Infeasible);
  }
}

TEST_CASE("empty and degenerate graphs") {
  BipartiteGraph g{3, 0, 3, {}, std::vector<Rational>{}};
  CHECK(max_matching(g).size() == 0);
  CHECK(min_weight_perfect_matching(g).size() == 0);
  BipartiteGraph none{0, 2, 0, {}, std::nullopt};
  CHECK(max_matching(none).size() == 0);
}

TEST_CASE("property: Hopcroft-Karp matches exhaustive search") {
  testsupport::Rng rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    testsupport::RandomShape shape;
    shape.n_max = 7;
    shape.m_min = 0;
    shape.m_max = 4;
    shape.density_a = shape.density_b = std::vector<double>{0.1, 0.3, 0.6}[trial % 3];
    auto sys = testsupport::random_system(rng, shape);
    BipartiteGraph g = build_system_bipartite(sys, false);
    Matching m = max_matching(g);
    CHECK(is_valid_matching(g, m));
    CHECK(m.size() == testsupport::brute_matching_size(g));
  }
}

TEST_CASE("property: minimum-weight matching matches exhaustive search") {
  testsupport::Rng rng(11);
  int solved = 0;
  for (int trial = 0; trial < 400; ++trial) {
    testsupport::RandomShape shape;
    shape.n_max = 7;
    shape.m_max = 4;
    shape.density_a = 0.3;
    shape.density_b = 0.4;
    shape.cost_min = 0;
    shape.cost_max = 10;
    auto sys = testsupport::random_system(rng, shape);
    BipartiteGraph g = build_system_bipartite(sys, true);
    auto expected = testsupport::brute_min_perfect_weight(g);
    if (!expected) {
      CHECK_THROWS_AS(min_weight_perfect_matching(g), Error);
      continue;
    }
    ++solved;
    Matching m = min_weight_perfect_matching(g);
    CHECK(is_valid_matching(g, m));
    CHECK(m.size() == g.right_count);
    CHECK(matching_weight(g, m) == *expected);
  }
  CHECK(solved > 100);
}

TEST_CASE("diagonal extremes") {
  auto identity = make_system(3, 3, {{0, 0}, {1, 1}, {2, 2}}, {{0, 0}, {1, 1}, {2, 2}},
                              {Rational(2), Rational(3), Rational(5)});
  BipartiteGraph g = build_system_bipartite(identity, true);
  CHECK(matching_weight(g, min_weight_perfect_matching(g)) == Rational(0));

  auto empty_a = make_system(3, 3, {}, {{0, 0}, {1, 1}, {2, 2}}, {Rational(2), Rational(3), Rational(5)});
  BipartiteGraph h = build_system_bipartite(empty_a, true);
  CHECK(matching_weight(h, min_weight_perfect_matching(h)) == Rational(10));
}

TEST_CASE("property: adding an edge never hurts, and perfect matchings exist exactly at full size") {
  testsupport::Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    testsupport::RandomShape shape;
    shape.n_max = 6;
    shape.m_max = 3;
    shape.density_a = shape.density_b = std::vector<double>{0.15, 0.3, 0.5}[trial % 3];
    shape.cost_min = 0;
    shape.cost_max = 8;
    auto sys = testsupport::random_system(rng, shape);
    const std::size_t n = sys.state_count();
    BipartiteGraph g = build_system_bipartite(sys, true);
    const bool perfect = max_matching(g).size() == n;
    CHECK(testsupport::brute_min_perfect_weight(g).has_value() == perfect);

    StructuredSystem grown = sys;
    std::vector<Entry> a(sys.a_bar.entries().begin(), sys.a_bar.entries().end());
    a.push_back({rng.below(n), rng.below(n)});
    grown.a_bar = StructuredMatrix(n, n, std::move(a));
    BipartiteGraph h = build_system_bipartite(grown, true);
    CHECK(max_matching(h).size() >= max_matching(g).size());
    if (perfect) {
      CHECK(matching_weight(h, min_weight_perfect_matching(h)) <= matching_weight(g, min_weight_perfect_matching(g)));
    }
  }
}
