#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mccs/evaluation.hpp"
#include "mccs/exact_solver.hpp"
#include "mccs/weights.hpp"
#include "oracles.hpp"

using namespace mccs;
using doctest::Approx;
using testing::active;
using testing::kPath5Weights;
using testing::path_graph;

namespace {

Constraint rooted(NodeId t, NodeSet s) {
  Constraint c;
  c.kind = ConstraintKind::RootedSeparator;
  c.target = t;
  c.support = std::move(s);
  return c;
}

PartialAssignment fixes(std::size_t n, std::initializer_list<std::pair<NodeId, Fix>> f) {
  PartialAssignment p = all_free(n);
  for (auto [i, v] : f) p[i] = v;
  return p;
}

SolverConfig rooted_config(NodeId root, Strategy s = Strategy::nearest()) {
  SolverConfig c;
  c.root = root;
  c.strategy = s;
  return c;
}

}  // namespace

TEST_CASE("greedy_completion and completion_bound") {
  PartialAssignment p = all_free(5);
  CHECK(greedy_completion(p, kPath5Weights) == active(5, {0, 2, 4}));
  CHECK(completion_bound(p, kPath5Weights) == Approx(-4.0));

  p[1] = Fix::One;
  CHECK(greedy_completion(p, kPath5Weights) == active(5, {0, 1, 2, 4}));
  CHECK(completion_bound(p, kPath5Weights) == Approx(-3.6));

  PartialAssignment all = fixes(5, {{0, Fix::Zero}, {1, Fix::One}, {2, Fix::Zero},
                                    {3, Fix::One}, {4, Fix::Zero}});
  CHECK(greedy_completion(all, kPath5Weights) == active(5, {1, 3}));
}

TEST_CASE("branch children") {
  auto a = branch(all_free(5), rooted(4, {3}));
  REQUIRE(a.size() == 2);
  CHECK(a[0] == fixes(5, {{4, Fix::Zero}}));
  CHECK(a[1] == fixes(5, {{4, Fix::One}, {3, Fix::One}}));

  auto b = branch(all_free(5), rooted(2, {1, 3}));
  REQUIRE(b.size() == 3);
  CHECK(b[0] == fixes(5, {{2, Fix::Zero}}));
  CHECK(b[1] == fixes(5, {{2, Fix::One}, {1, Fix::One}}));
  CHECK(b[2] == fixes(5, {{2, Fix::One}, {1, Fix::Zero}, {3, Fix::One}}));

  Constraint leaf = singleton_leaf_cuts(path_graph(5), kPath5Weights)[0];
  auto c = branch(fixes(5, {{1, Fix::One}}), leaf);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == fixes(5, {{1, Fix::One}, {0, Fix::Zero}}));
  CHECK(c[1] == fixes(5, {{1, Fix::One}, {0, Fix::One}}));

  // target already active: no x_i = 0 child
  auto d = branch(fixes(5, {{4, Fix::One}}), rooted(4, {3}));
  REQUIRE(d.size() == 1);
  CHECK(d[0] == fixes(5, {{4, Fix::One}, {3, Fix::One}}));

  auto pair = constraints_from_separator({4}, {2}, Anchor::witness(0))[0];
  auto e = branch(all_free(5), pair);
  REQUIRE(e.size() == 3);
  CHECK(e[0] == fixes(5, {{4, Fix::Zero}}));
  CHECK(e[1] == fixes(5, {{4, Fix::One}, {0, Fix::Zero}}));
  CHECK(e[2] == fixes(5, {{4, Fix::One}, {0, Fix::One}, {2, Fix::One}}));

  // nothing left to branch on
  CHECK(branch(fixes(5, {{4, Fix::One}, {3, Fix::Zero}}), rooted(4, {3})).empty());
}

TEST_CASE("separate on PATH5") {
  Graph g = path_graph(5);
  Assignment x = active(5, {0, 2, 4});
  {
    ConstraintStore store(5);
    CHECK(separate(g, x, rooted_config(0), store) == 2);
    REQUIRE(store.size() == 2);
    CHECK(to_string(store[0]) == "x_2 <= x_1 + x_3");
    CHECK(to_string(store[1]) == "x_4 <= x_3");
    CHECK(separate(g, x, rooted_config(0), store) == 0);  // all known already
  }
  {
    ConstraintStore store(5);
    CHECK(separate(g, x, rooted_config(0, Strategy::k_nearest(2)), store) == 2);
    CHECK(to_string(store[0]) == "x_2 <= x_1 + x_3");
    CHECK(to_string(store[1]) == "x_4 <= x_3");
  }
  {
    ConstraintStore store(5);
    CHECK(separate(g, active(5, {0, 1, 2}), rooted_config(0), store) == 0);
    CHECK(store.empty());
  }
  {
    ConstraintStore store(5);
    SolverConfig unrooted;
    CHECK(separate(g, active(5, {0, 4}), unrooted, store) == 1);
    CHECK(to_string(store[0]) == "x_4 + x_0 - 1 <= x_3");
  }
}

TEST_CASE("solve_exact examples") {
  Graph g = path_graph(5);
  for (auto kind : all_strategy_kinds()) {
    Strategy s{kind, 1};
    if (s.parametric()) s.k = 4;
    auto r = solve_exact(g, kPath5Weights, rooted_config(0, s));
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.assignment == active(5, {0, 1, 2, 3, 4}));
    CHECK(r.objective == Approx(-2.9).epsilon(1e-12));
  }

  Graph p3 = path_graph(3);
  auto r3 = solve_exact(p3, std::vector<double>{-1.0, 3.0, -1.0}, rooted_config(0));
  CHECK(r3.assignment == active(3, {0}));
  CHECK(r3.objective == -1.0);

  std::vector<double> pos{0.5, 0.2, -1.0, 0.9, 0.3};
  auto rp = solve_exact(g, pos, rooted_config(2));
  CHECK(rp.assignment == active(5, {2}));
  CHECK(rp.objective == -1.0);

  // positive root is still forced active
  auto rr = solve_exact(p3, std::vector<double>{2.0, 1.0, 1.0}, rooted_config(0));
  CHECK(rr.assignment == active(3, {0}));
  CHECK(rr.objective == 2.0);
}

TEST_CASE("solve_exact rejects bad configs") {
  Graph g = path_graph(5);
  CHECK_THROWS_AS(solve_exact(Graph{}, std::vector<double>{}, {}), InputError);
  CHECK_THROWS_AS(solve_exact(g, std::vector<double>{1.0}, {}), InputError);
  CHECK_THROWS_AS(solve_exact(g, kPath5Weights, rooted_config(7)), InputError);
  SolverConfig neg = rooted_config(0);
  neg.rel_gap = -1.0;
  CHECK_THROWS_AS(solve_exact(g, kPath5Weights, neg), InputError);
}

TEST_CASE("solve_exact run properties") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = build_grid({4, 4});
    const auto w = oracle::uniform_weights(g.size(), rng);
    SolverConfig cfg = rooted_config(select_root(g, w), Strategy::equidistant());
    cfg.rel_gap = 0.0;
    const auto r = solve_exact(g, w, cfg);
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(is_connected(g, r.assignment));
    CHECK(r.assignment[*cfg.root] == 1);
    CHECK(r.objective == objective(r.assignment, w));
    CHECK(r.lower_bound <= r.objective);
    for (std::size_t i = 1; i < r.incumbent_history.size(); ++i)
      CHECK(r.incumbent_history[i] <= r.incumbent_history[i - 1]);
    CHECK(r.stats.incumbent_updates == r.incumbent_history.size());

    const auto again = solve_exact(g, w, cfg);
    CHECK(again.assignment == r.assignment);
    CHECK(again.stats.search_nodes_expanded == r.stats.search_nodes_expanded);
    CHECK(again.stats.constraints_generated == r.stats.constraints_generated);
  }
}

TEST_CASE("unrooted solve matches enumeration") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = build_grid({3, 4});
    const auto w = oracle::uniform_weights(g.size(), rng);
    SolverConfig cfg;
    cfg.rel_gap = 0.0;
    cfg.strategy = Strategy::minimal();
    const auto r = solve_exact(g, w, cfg);
    const auto best = oracle::brute_force_mccs(g, w, std::nullopt);
    CHECK(is_connected(g, r.assignment));
    CHECK(r.objective == Approx(best.objective).epsilon(1e-12));
  }
}

TEST_CASE("component leaf cuts and limits") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = build_grid({4, 5});
    const auto w = oracle::uniform_weights(g.size(), rng);
    SolverConfig cfg = rooted_config(select_root(g, w));
    cfg.rel_gap = 0.0;
    cfg.use_component_leaf_cuts = true;
    const auto r = solve_exact(g, w, cfg);
    const auto best = oracle::brute_force_mccs(g, w, cfg.root);
    CHECK(r.objective == Approx(best.objective).epsilon(1e-12));

    SolverConfig capped = rooted_config(*cfg.root);
    capped.node_limit = 1;
    capped.use_singleton_leaf_cuts = false;
    const auto c = solve_exact(g, w, capped);
    if (c.status == SolveStatus::NodeLimit) {
      CHECK(c.stats.search_nodes_expanded == 1);
      CHECK(is_connected(g, c.assignment));
      CHECK(c.lower_bound <= c.objective);
    }
  }
}
