#pragma once

#include <random>
#include <vector>

#include "mccs/graph.hpp"

namespace testing {

inline const std::vector<double> kPath5Weights{-1.0, 0.4, -1.0, 0.7, -2.0};

inline mccs::Graph path_graph(int n) {
  std::vector<std::pair<mccs::NodeId, mccs::NodeId>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return mccs::build_sparse(static_cast<std::size_t>(n), e);
}

inline mccs::Assignment active(std::size_t n, std::initializer_list<mccs::NodeId> on) {
  mccs::Assignment x(n, 0);
  for (auto i : on) x[i] = 1;
  return x;
}

inline mccs::Assignment random_assignment(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution b(p);
  mccs::Assignment x(n);
  for (auto& v : x) v = b(rng) ? 1 : 0;
  return x;
}

}  // namespace testing
