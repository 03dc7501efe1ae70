#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "mccs/evaluation.hpp"

using namespace mccs;
using doctest::Approx;
using testing::active;
using testing::path_graph;

TEST_CASE("maxcomp examples") {
  Graph p4 = path_graph(4);
  std::vector<double> w{-1, 1, -1, -1};
  CHECK(maxcomp(p4, w) == active(4, {2, 3}));
  CHECK(objective(maxcomp(p4, w), w) == -2.0);

  Graph p5 = path_graph(5);
  CHECK(maxcomp(p5, testing::kPath5Weights) == active(5, {4}));
  CHECK(objective(maxcomp(p5, testing::kPath5Weights), testing::kPath5Weights) == -2.0);

  CHECK(maxcomp(p4, std::vector<double>{1, 2, 3, 4}) == active(4, {}));
}

TEST_CASE("score examples") {
  auto s = score(active(4, {0, 1}), active(4, {0, 1}));
  CHECK(s.precision == 1.0);
  CHECK(s.recall == 1.0);
  CHECK(s.f1 == 1.0);

  auto d = score(active(4, {0}), active(4, {2, 3}));
  CHECK(d.precision == 0.0);
  CHECK(d.recall == 0.0);
  CHECK(d.f1 == 0.0);

  auto m = score(active(5, {0, 1, 2}), active(5, {0, 1, 3}));
  CHECK(m.true_pos == 2);
  CHECK(m.false_pos == 1);
  CHECK(m.false_neg == 1);
  CHECK(m.precision == Approx(2.0 / 3.0));
  CHECK(m.recall == Approx(2.0 / 3.0));
  CHECK(m.f1 == Approx(2.0 / 3.0));

  auto empty = score(active(3, {}), active(3, {}));
  CHECK(empty.precision == 1.0);
  CHECK(empty.recall == 1.0);
  CHECK(empty.f1 == 1.0);
  auto miss = score(active(3, {}), active(3, {1}));
  CHECK(miss.precision == 0.0);
  CHECK(miss.recall == 0.0);
  CHECK(miss.f1 == 0.0);

  CHECK_THROWS_AS(score(active(3, {}), active(4, {})), InputError);
}

TEST_CASE("objective and objectives_match") {
  std::vector<double> w = testing::kPath5Weights;
  CHECK(objective(active(5, {}), w) == 0.0);
  CHECK(objective(active(5, {3}), w) == 0.7);
  CHECK(objective(active(5, {0, 1, 2, 3, 4}), w) == Approx(-2.9).epsilon(1e-12));
  CHECK_THROWS_AS(objective(active(4, {}), w), InputError);

  CHECK(objectives_match(-2.9, -2.9, 1e-4));
  CHECK_FALSE(objectives_match(-2.9, -2.8, 1e-4));
  CHECK(objectives_match(0.0, 0.0, 1e-4));
  CHECK(objectives_match(-1.0, -1.00005, 1e-4));
  CHECK_FALSE(objectives_match(0.0, 1e-9, 1e-4));
}

TEST_CASE("score is invariant under node permutation") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    Assignment pred = testing::random_assignment(n, 0.5, rng);
    Assignment truth = testing::random_assignment(n, 0.5, rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Assignment pp(n), tp(n);
    for (std::size_t i = 0; i < n; ++i) {
      pp[perm[i]] = pred[i];
      tp[perm[i]] = truth[i];
    }
    auto a = score(pred, truth);
    auto b = score(pp, tp);
    CHECK(a.f1 == b.f1);
    CHECK(a.true_pos == b.true_pos);
    CHECK(a.false_pos == b.false_pos);
    CHECK(a.false_neg == b.false_neg);
  }
}

TEST_CASE("maxcomp output is connected") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = build_grid({1 + static_cast<int>(rng() % 8), 1 + static_cast<int>(rng() % 8)});
    std::vector<double> w(g.size());
    for (auto& v : w) v = u(rng);
    auto m = maxcomp(g, w);
    CHECK(is_connected(g, m));
    for (std::size_t i = 0; i < w.size(); ++i)
      if (m[i]) CHECK(w[i] < 0);
  }
}
