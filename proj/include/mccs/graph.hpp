#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mccs {

using NodeId = std::int32_t;
using NodeSet = std::vector<NodeId>;  // sorted ascending unless stated otherwise

/// Thrown for malformed inputs (bad indices, bad files, violated preconditions).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Connectivity { Axis };  // 4-neighborhood in 2D, 6-neighborhood in 3D

struct GridMeta {
  std::vector<std::int32_t> extents;  // row-major, last axis fastest
  Connectivity connectivity = Connectivity::Axis;

  std::size_t dimensionality() const { return extents.size(); }
};

/// Binary labeling, one entry per node (1 = active).
using Assignment = std::vector<std::uint8_t>;

/// Immutable undirected simple graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId i) const {
    return {neighbors_.data() + offsets_[i],
            neighbors_.data() + offsets_[i + 1]};
  }
  std::size_t degree(NodeId i) const { return offsets_[i + 1] - offsets_[i]; }
  bool adjacent(NodeId i, NodeId j) const;

  const std::optional<GridMeta>& grid() const { return grid_; }

  /// Each undirected edge once, as (i, j) with i < j, in ascending order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  friend Graph build_grid(std::span<const std::int32_t> extents,
                          Connectivity connectivity);
  friend Graph build_sparse(std::size_t n_nodes,
                            std::span<const std::pair<NodeId, NodeId>> edges);

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::optional<GridMeta> grid_;

  static Graph from_lists(std::vector<std::vector<NodeId>> lists);
};

/// Axis-aligned grid with row-major indexing (last axis fastest). 1 to 3 axes.
Graph build_grid(std::span<const std::int32_t> extents,
                 Connectivity connectivity = Connectivity::Axis);
inline Graph build_grid(std::initializer_list<std::int32_t> extents) {
  return build_grid(std::span<const std::int32_t>(extents.begin(), extents.size()));
}

/// Reversed and repeated pairs collapse to one edge; self-loops are rejected.
Graph build_sparse(std::size_t n_nodes,
                   std::span<const std::pair<NodeId, NodeId>> edges);
inline Graph build_sparse(std::size_t n_nodes,
                          std::initializer_list<std::pair<NodeId, NodeId>> edges) {
  return build_sparse(n_nodes, std::span<const std::pair<NodeId, NodeId>>(
                                   edges.begin(), edges.size()));
}

/// Maximal connected sets of active nodes, each sorted, ordered by smallest
/// member.
std::vector<NodeSet> connected_components(const Graph& graph,
                                          const Assignment& active);

/// Connected components of the nodes for which `member` holds.
std::vector<NodeSet> connected_components(
    const Graph& graph, const std::function<bool(NodeId)>& member);

/// Layer t holds the non-blocked nodes at hop distance t + 1 from `seeds`.
/// Stops after `max_layers` layers or when the frontier is empty.
std::vector<NodeSet> bfs_layers(const Graph& graph, const NodeSet& seeds,
                                const std::function<bool(NodeId)>& blocked,
                                std::size_t max_layers);

/// True if the active nodes form at most one connected component.
bool is_connected(const Graph& graph, const Assignment& active);

NodeSet active_nodes(const Assignment& x);
Assignment indicator(std::size_t n, const NodeSet& nodes);

}  // namespace mccs
