#include "mccs/geodesic.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <queue>
#include <tuple>

#include "mccs/evaluation.hpp"

namespace mccs {

std::vector<std::vector<NodeId>> GeodesicTree::children() const {
  std::vector<std::vector<NodeId>> out(parent.size());
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (parent[i] >= 0) out[parent[i]].push_back(static_cast<NodeId>(i));
  return out;
}

GeodesicTree build_geodesic_tree(const Graph& graph,
                                 std::span<const double> weights, NodeId root) {
  const std::size_t n = graph.size();
  if (root < 0 || static_cast<std::size_t>(root) >= n)
    throw InputError("root out of range");
  if (weights.size() != n) throw InputError("weights do not match the graph");

  constexpr double kInf = std::numeric_limits<double>::infinity();
  GeodesicTree tree;
  tree.root = root;
  tree.parent.assign(n, -1);
  tree.dist.assign(n, kInf);
  tree.hops.assign(n, std::numeric_limits<int>::max());

  using Key = std::tuple<double, int, NodeId>;  // (distance, hops, node)
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> heap;
  std::vector<std::uint8_t> settled(n, 0);
  tree.dist[root] = 0.0;
  tree.hops[root] = 0;
  heap.emplace(0.0, 0, root);

  while (!heap.empty()) {
    auto [d, h, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    for (NodeId v : graph.neighbors(u)) {
      if (settled[v]) continue;
      const double nd = d + geodesic_edge_length(weights[u], weights[v]);
      const int nh = h + 1;
      if (tree.parent[v] < 0 ||
          std::tie(nd, nh, u) <
              std::tie(tree.dist[v], tree.hops[v], tree.parent[v])) {
        tree.dist[v] = nd;
        tree.hops[v] = nh;
        tree.parent[v] = u;
        heap.emplace(nd, nh, v);
      }
    }
  }
  return tree;
}

GeodesicSolution solve_geodesic_detailed(const GeodesicTree& tree,
                                         std::span<const double> weights) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = tree.parent.size();
  if (weights.size() != n) throw InputError("weights do not match the tree");

  // settle order by (dist, hops) puts every parent before its children
  std::vector<NodeId> order;
  order.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (tree.reachable(static_cast<NodeId>(i)))
      order.push_back(static_cast<NodeId>(i));
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return std::tie(tree.hops[a], a) < std::tie(tree.hops[b], b);
  });

  GeodesicSolution out;
  out.gain.assign(n, std::numeric_limits<double>::infinity());
  for (NodeId i : order) out.gain[i] = weights[i];
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId i = *it;
    const NodeId p = tree.parent[i];
    if (p >= 0 && out.gain[i] < 0.0) out.gain[p] += out.gain[i];
  }

  Assignment x(n, 0);
  for (NodeId i : order) {
    if (i == tree.root)
      x[i] = 1;
    else
      x[i] = (x[tree.parent[i]] && out.gain[i] < 0.0) ? 1 : 0;
  }

  SolveResult& r = out.result;
  r.objective = objective(x, weights);
  r.lower_bound = r.objective;
  r.assignment = std::move(x);
  r.status = SolveStatus::Optimal;
  r.stats.incumbent_updates = 1;
  r.incumbent_history = {r.objective};
  r.stats.wall_time = std::chrono::steady_clock::now() - start;
  return out;
}

SolveResult solve_geodesic(const GeodesicTree& tree,
                           std::span<const double> weights) {
  return solve_geodesic_detailed(tree, weights).result;
}

}  // namespace mccs
