#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "mccs/weights.hpp"

using namespace mccs;
using doctest::Approx;

TEST_CASE("prob_to_weight values") {
  CHECK(prob_to_weight(0.5) == 0.0);
  CHECK(prob_to_weight(0.9) == Approx(-2.197224577).epsilon(1e-9));
  CHECK(prob_to_weight(0.9) == Approx(-std::log(9.0)).epsilon(1e-14));
  CHECK(prob_to_weight(1.0, 1e-6) == Approx(-13.815509557963774).epsilon(1e-9));
  CHECK(prob_to_weight(0.0, 1e-6) == Approx(13.815509557963774).epsilon(1e-9));
  CHECK(std::isfinite(prob_to_weight(1.0)));
}

TEST_CASE("prob_to_weight rejects bad input") {
  CHECK_THROWS_AS(prob_to_weight(-0.01), InputError);
  CHECK_THROWS_AS(prob_to_weight(1.5), InputError);
  CHECK_THROWS_AS(prob_to_weight(std::nan("")), InputError);
  CHECK_THROWS_AS(prob_to_weight(0.3, 0.0), InputError);
  CHECK_THROWS_AS(prob_to_weight(0.3, 0.5), InputError);
}

TEST_CASE("prob_to_weight is antisymmetric and decreasing") {
  double prev = prob_to_weight(0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double p = i / 1000.0;
    const double w = prob_to_weight(p);
    CHECK(w <= prev);
    prev = w;
    if (p > 1e-6 && p < 1 - 1e-6)
      CHECK(w + prob_to_weight(1.0 - p) == Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("select_root tie rules") {
  Graph p5 = testing::path_graph(5);
  CHECK(select_root(p5, testing::kPath5Weights) == 4);
  CHECK(largest_favourable_component(p5, testing::kPath5Weights) == NodeSet{4});

  Graph p3 = testing::path_graph(3);
  CHECK(select_root(p3, std::vector<double>{0.5, 0.2, 0.9}) == 1);
  CHECK(largest_favourable_component(p3, std::vector<double>{0.5, 0.2, 0.9}).empty());
  CHECK(select_root(p3, std::vector<double>{-1, -1, -1}) == 0);

  // size beats total weight
  Graph p6 = testing::path_graph(6);
  std::vector<double> w{-5.0, 1.0, -0.1, -0.2, 1.0, -0.3};
  CHECK(largest_favourable_component(p6, w) == NodeSet{2, 3});
  CHECK(select_root(p6, w) == 3);
}

TEST_CASE("select_root is deterministic") {
  Graph g = build_grid({6, 6});
  std::vector<double> w(g.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::sin(1.7 * static_cast<double>(i));
  const NodeId r = select_root(g, w);
  CHECK(r >= 0);
  CHECK(r < 36);
  for (int rep = 0; rep < 5; ++rep) CHECK(select_root(g, w) == r);
}
