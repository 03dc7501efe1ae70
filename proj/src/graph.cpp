#include "mccs/graph.hpp"

#include <algorithm>
#include <string>

namespace mccs {

bool Graph::adjacent(NodeId i, NodeId j) const {
  auto adj = neighbors(i);
  return std::binary_search(adj.begin(), adj.end(), j);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(num_edges());
  for (NodeId i = 0; i < static_cast<NodeId>(size()); ++i)
    for (NodeId j : neighbors(i))
      if (i < j) out.emplace_back(i, j);
  return out;
}

Graph Graph::from_lists(std::vector<std::vector<NodeId>> lists) {
  Graph g;
  g.offsets_.assign(1, 0);
  g.offsets_.reserve(lists.size() + 1);
  for (auto& adj : lists) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    g.neighbors_.insert(g.neighbors_.end(), adj.begin(), adj.end());
    g.offsets_.push_back(g.neighbors_.size());
  }
  return g;
}

Graph build_grid(std::span<const std::int32_t> extents,
                 Connectivity connectivity) {
  if (extents.empty() || extents.size() > 3)
    throw InputError("grid dimensionality must be 1, 2 or 3, got " +
                     std::to_string(extents.size()));
  std::size_t n = 1;
  for (auto e : extents) {
    if (e < 1) throw InputError("grid extent must be >= 1");
    n *= static_cast<std::size_t>(e);
  }

  const std::size_t d = extents.size();
  std::vector<std::size_t> stride(d, 1);
  for (std::size_t a = d - 1; a > 0; --a) stride[a - 1] = stride[a] * extents[a];

  std::vector<std::vector<NodeId>> lists(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < d; ++a) {
      const auto coord = (i / stride[a]) % extents[a];
      if (coord + 1 < static_cast<std::size_t>(extents[a])) {
        const auto j = i + stride[a];
        lists[i].push_back(static_cast<NodeId>(j));
        lists[j].push_back(static_cast<NodeId>(i));
      }
    }
  }

  Graph g = Graph::from_lists(std::move(lists));
  g.grid_ = GridMeta{{extents.begin(), extents.end()}, connectivity};
  return g;
}

Graph build_sparse(std::size_t n_nodes,
                   std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<std::vector<NodeId>> lists(n_nodes);
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n_nodes ||
        static_cast<std::size_t>(j) >= n_nodes)
      throw InputError("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                       ") out of range for " + std::to_string(n_nodes) +
                       " nodes");
    if (i == j) throw InputError("self-loop at node " + std::to_string(i));
    lists[i].push_back(j);
    lists[j].push_back(i);
  }
  return Graph::from_lists(std::move(lists));
}

std::vector<NodeSet> connected_components(
    const Graph& graph, const std::function<bool(NodeId)>& member) {
  const auto n = static_cast<NodeId>(graph.size());
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<NodeSet> out;
  NodeSet stack;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s] || !member(s)) continue;
    NodeSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (NodeId v : graph.neighbors(u)) {
        if (!seen[v] && member(v)) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<NodeSet> connected_components(const Graph& graph,
                                          const Assignment& active) {
  return connected_components(graph,
                              [&](NodeId i) { return active[i] != 0; });
}

std::vector<NodeSet> bfs_layers(const Graph& graph, const NodeSet& seeds,
                                const std::function<bool(NodeId)>& blocked,
                                std::size_t max_layers) {
  std::vector<std::uint8_t> seen(graph.size(), 0);
  for (NodeId s : seeds) seen[s] = 1;
  std::vector<NodeSet> layers;
  NodeSet frontier = seeds;
  while (layers.size() < max_layers) {
    NodeSet next;
    for (NodeId u : frontier) {
      for (NodeId v : graph.neighbors(u)) {
        if (seen[v] || blocked(v)) continue;
        seen[v] = 1;
        next.push_back(v);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    layers.push_back(next);
    frontier = std::move(next);
  }
  return layers;
}

bool is_connected(const Graph& graph, const Assignment& active) {
  return connected_components(graph, active).size() <= 1;
}

NodeSet active_nodes(const Assignment& x) {
  NodeSet out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) out.push_back(static_cast<NodeId>(i));
  return out;
}

Assignment indicator(std::size_t n, const NodeSet& nodes) {
  Assignment x(n, 0);
  for (NodeId i : nodes) x.at(i) = 1;
  return x;
}

}  // namespace mccs
