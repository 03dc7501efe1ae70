#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mccs/graph.hpp"

namespace mccs {

/// How violated connectivity constraints are chosen for a disconnected
/// integral solution.
struct Strategy {
  enum class Kind { Nearest, Minimal, Equidistant, KNearest, KInterleave };

  Kind kind = Kind::Nearest;
  int k = 1;  // layer budget for KNearest / KInterleave

  static Strategy nearest() { return {Kind::Nearest, 1}; }
  static Strategy minimal() { return {Kind::Minimal, 1}; }
  static Strategy equidistant() { return {Kind::Equidistant, 1}; }
  static Strategy k_nearest(int k);
  static Strategy k_interleave(int k);

  bool parametric() const {
    return kind == Kind::KNearest || kind == Kind::KInterleave;
  }
};

/// "nearest", "minimal", "equidistant", "k-nearest", "k-interleave".
std::string_view strategy_name(Strategy::Kind kind);
Strategy parse_strategy(std::string_view name, int k = 1);
const std::vector<Strategy::Kind>& all_strategy_kinds();

/// Inactive nodes adjacent to `component`.
NodeSet nearest_separator(const Graph& graph, const Assignment& x,
                          const NodeSet& component);

struct MinimalSeparator {
  NodeSet nodes;
  int flow = 0;
  bool source_side = true;
};

/// Minimum-cardinality set of inactive nodes separating `source` from `sink`,
/// from a unit node-capacity max flow. Of the cut closest to the source and
/// the cut closest to the sink the smaller is returned, ties to the source.
MinimalSeparator minimal_separator(const Graph& graph, const Assignment& x,
                                   const NodeSet& source, const NodeSet& sink);

struct EquidistantSeparator {
  NodeSet nodes;
  bool reachable = true;  // false: no inactive path joins the two sides
};

/// Inactive nodes where breadth-first fronts from `component` and `others`
/// meet. Nodes at equal distance from both sides belong to the separator; a
/// front meeting across an edge contributes its component-side endpoint.
EquidistantSeparator equidistant_separator(const Graph& graph,
                                           const Assignment& x,
                                           const NodeSet& component,
                                           const NodeSet& others);

/// Successive BFS layers of inactive nodes around `component`. At most
/// min(k, |component|) layers are taken, and none beyond the distance at which
/// another active node becomes reachable. With `interleave` only the layers at
/// even distance (2, 4, ...) are returned.
std::vector<NodeSet> k_separators(const Graph& graph, const Assignment& x,
                                  const NodeSet& component, int k,
                                  bool interleave);

/// Dispatches `strategy` for one maximal active component. `others` are all
/// active nodes outside it. Every returned set separates the component from
/// `others` in the graph once the active nodes are fixed. A k-interleave run
/// that keeps no layer falls back to the nearest layer.
std::vector<NodeSet> find_separators(const Graph& graph, const Assignment& x,
                                     const NodeSet& component,
                                     const NodeSet& others, Strategy strategy);

}  // namespace mccs
