#pragma once

#include <span>
#include <vector>

#include "mccs/exact_solver.hpp"
#include "mccs/graph.hpp"

namespace mccs {

/// Shortest-path tree from the root under the geodesic edge length.
struct GeodesicTree {
  NodeId root = 0;
  std::vector<NodeId> parent;  // -1 for the root and for unreachable nodes
  std::vector<double> dist;    // +inf for unreachable nodes
  std::vector<int> hops;

  bool reachable(NodeId i) const { return i == root || parent[i] >= 0; }
  std::vector<std::vector<NodeId>> children() const;
};

/// Mean of the positive parts of the endpoint weights.
inline double geodesic_edge_length(double wi, double wj) {
  return 0.5 * ((wi > 0.0 ? wi : 0.0) + (wj > 0.0 ? wj : 0.0));
}

/// Dijkstra from `root`. Ties prefer smaller distance, then fewer hops, then
/// the smaller parent index; equal keys are settled in node order.
GeodesicTree build_geodesic_tree(const Graph& graph,
                                 std::span<const double> weights, NodeId root);

struct GeodesicSolution {
  SolveResult result;
  std::vector<double> gain;  // subtree gain per node, +inf if unreachable
};

/// Exact minimizer of the objective over labelings closed under "active
/// implies parent active", with the root forced active.
GeodesicSolution solve_geodesic_detailed(const GeodesicTree& tree,
                                         std::span<const double> weights);
SolveResult solve_geodesic(const GeodesicTree& tree,
                           std::span<const double> weights);

}  // namespace mccs
