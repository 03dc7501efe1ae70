#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "mccs/separators.hpp"
#include "oracles.hpp"

using namespace mccs;
using testing::active;
using testing::path_graph;

TEST_CASE("strategy names round-trip") {
  for (auto kind : all_strategy_kinds())
    CHECK(parse_strategy(strategy_name(kind), 3).kind == kind);
  CHECK(parse_strategy("k-nearest", 4).k == 4);
  CHECK_THROWS_AS(parse_strategy("closest"), InputError);
  CHECK_THROWS_AS(Strategy::k_nearest(0), InputError);
  CHECK_THROWS_AS(Strategy::k_interleave(-1), InputError);
}

TEST_CASE("nearest_separator on PATH5") {
  Graph g = path_graph(5);
  Assignment x = active(5, {0, 2, 4});
  CHECK(nearest_separator(g, x, {4}) == NodeSet{3});
  CHECK(nearest_separator(g, x, {2}) == NodeSet{1, 3});
  CHECK(nearest_separator(g, x, {0}) == NodeSet{1});
  CHECK_THROWS_AS(nearest_separator(g, active(5, {0, 1}), {0}), InputError);
}

TEST_CASE("minimal_separator examples") {
  Graph g = path_graph(5);
  auto s = minimal_separator(g, active(5, {0, 4}), {0}, {4});
  CHECK(s.flow == 1);
  CHECK(s.nodes == NodeSet{1});
  CHECK(s.source_side);

  Graph grid = build_grid({2, 3});
  auto corners = minimal_separator(grid, active(6, {0, 5}), {0}, {5});
  CHECK(corners.nodes.size() == 2);
  CHECK(oracle::brute_force_min_separator(grid, active(6, {0, 5}), {0}, {5}) ==
        std::optional<std::size_t>{2});

  CHECK_THROWS_AS(minimal_separator(g, active(5, {0, 1, 2}), {0}, {2}), InputError);
}

TEST_CASE("minimal_separator prefers the smaller side") {
  // star of leaves around the source, single bottleneck next to the sink
  Graph g = build_sparse(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}, {5, 6}});
  Assignment x = active(7, {0, 6});
  auto s = minimal_separator(g, x, {0}, {6});
  CHECK(s.flow == 1);
  CHECK(s.nodes.size() == 1);
  auto brute = oracle::brute_force_min_separator(g, x, {0}, {6});
  CHECK(brute == std::optional<std::size_t>{1});
}

TEST_CASE("equidistant_separator examples") {
  Graph g = path_graph(5);
  auto mid = equidistant_separator(g, active(5, {0, 4}), {0}, {4});
  CHECK(mid.reachable);
  CHECK(mid.nodes == NodeSet{2});

  Graph p4 = path_graph(4);
  auto edge = equidistant_separator(p4, active(4, {0, 3}), {0}, {3});
  CHECK(edge.nodes == NodeSet{1});

  CHECK_THROWS_AS(equidistant_separator(g, active(5, {0, 1, 4}), {0}, {1, 4}),
                  InputError);

  Graph split = build_sparse(4, {{0, 1}, {2, 3}});
  auto none = equidistant_separator(split, active(4, {0, 3}), {0}, {3});
  CHECK_FALSE(none.reachable);
  CHECK(none.nodes.empty());
}

TEST_CASE("k_separators examples") {
  Graph g = path_graph(5);
  Assignment x = active(5, {0, 3, 4});
  CHECK(k_separators(g, x, {3, 4}, 2, false) == std::vector<NodeSet>{{2}, {1}});
  CHECK(k_separators(g, x, {3, 4}, 2, true) == std::vector<NodeSet>{{1}});
  CHECK(k_separators(g, active(5, {0, 4}), {4}, 5, false) == std::vector<NodeSet>{{3}});
  // directly adjacent to a foreign active node
  CHECK(k_separators(g, active(5, {3, 4}), {4}, 2, false).empty());
}

TEST_CASE("find_separators dispatch and fallback") {
  Graph g = path_graph(5);
  Assignment x = active(5, {0, 4});
  CHECK(find_separators(g, x, {4}, {0}, Strategy::nearest()) == std::vector<NodeSet>{{3}});
  CHECK(find_separators(g, x, {4}, {0}, Strategy::minimal()) == std::vector<NodeSet>{{3}});
  CHECK(find_separators(g, x, {4}, {0}, Strategy::equidistant()) ==
        std::vector<NodeSet>{{2}});
  // |C| = 1 leaves no even layer; the nearest layer is used instead
  CHECK(find_separators(g, x, {4}, {0}, Strategy::k_interleave(4)) ==
        std::vector<NodeSet>{{3}});
}

TEST_CASE("every strategy returns valid separators") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 5), c = 2 + static_cast<int>(rng() % 5);
    Graph g = build_grid({r, c});
    const Assignment x = testing::random_assignment(g.size(), 0.3, rng);
    const auto comps = connected_components(g, x);
    if (comps.size() < 2) continue;
    const NodeSet all = active_nodes(x);
    for (const auto& comp : comps) {
      NodeSet others;
      std::set_difference(all.begin(), all.end(), comp.begin(), comp.end(),
                          std::back_inserter(others));
      for (auto kind : all_strategy_kinds()) {
        Strategy s{kind, 1};
        if (s.parametric()) s.k = 1 + static_cast<int>(rng() % 4);
        const auto seps = find_separators(g, x, comp, others, s);
        CHECK_FALSE(seps.empty());
        CHECK(find_separators(g, x, comp, others, s) == seps);
        for (const auto& sep : seps) {
          std::vector<std::uint8_t> removed(g.size(), 0);
          for (NodeId v : sep) {
            CHECK(x[v] == 0);
            removed[v] = 1;
          }
          CHECK_FALSE(oracle::reaches(g, comp, others, removed));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 500);
}
