#include "mccs/separators.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace mccs {

Strategy Strategy::k_nearest(int k) {
  if (k < 1) throw InputError("k must be >= 1");
  return {Kind::KNearest, k};
}

Strategy Strategy::k_interleave(int k) {
  if (k < 1) throw InputError("k must be >= 1");
  return {Kind::KInterleave, k};
}

std::string_view strategy_name(Strategy::Kind kind) {
  switch (kind) {
    case Strategy::Kind::Nearest: return "nearest";
    case Strategy::Kind::Minimal: return "minimal";
    case Strategy::Kind::Equidistant: return "equidistant";
    case Strategy::Kind::KNearest: return "k-nearest";
    case Strategy::Kind::KInterleave: return "k-interleave";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name, int k) {
  for (auto kind : all_strategy_kinds()) {
    if (strategy_name(kind) != name) continue;
    if (kind == Strategy::Kind::KNearest) return Strategy::k_nearest(k);
    if (kind == Strategy::Kind::KInterleave) return Strategy::k_interleave(k);
    return {kind, 1};
  }
  throw InputError("unknown strategy '" + std::string(name) + "'");
}

const std::vector<Strategy::Kind>& all_strategy_kinds() {
  static const std::vector<Strategy::Kind> kinds = {
      Strategy::Kind::Nearest, Strategy::Kind::Minimal,
      Strategy::Kind::Equidistant, Strategy::Kind::KNearest,
      Strategy::Kind::KInterleave};
  return kinds;
}

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

Assignment membership(std::size_t n, const NodeSet& nodes) {
  Assignment m(n, 0);
  for (NodeId v : nodes) m[v] = 1;
  return m;
}

// Hop distances through inactive nodes; seeds themselves are not labelled.
std::vector<int> inactive_distances(const Graph& graph, const Assignment& x,
                                    const NodeSet& seeds) {
  std::vector<int> dist(graph.size(), kUnreached);
  std::deque<NodeId> queue;
  for (NodeId s : seeds)
    for (NodeId v : graph.neighbors(s))
      if (!x[v] && dist[v] == kUnreached) {
        dist[v] = 1;
        queue.push_back(v);
      }
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : graph.neighbors(u))
      if (!x[v] && dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

void require_maximal(const Graph& graph, const Assignment& x,
                     const Assignment& in_component) {
  for (std::size_t u = 0; u < graph.size(); ++u) {
    if (!in_component[u]) continue;
    for (NodeId v : graph.neighbors(static_cast<NodeId>(u)))
      if (x[v] && !in_component[v])
        throw InputError("component is adjacent to active node " +
                         std::to_string(v) + "; it is not maximal");
  }
}

// Unit node-capacity flow network; arcs are stored in pairs (a, a ^ 1).
class SplitNetwork {
 public:
  explicit SplitNetwork(std::size_t vertices) : head_(vertices) {}

  void add_arc(int from, int to, int cap) {
    head_[from].push_back(static_cast<int>(to_.size()));
    to_.push_back(to);
    cap_.push_back(cap);
    head_[to].push_back(static_cast<int>(to_.size()));
    to_.push_back(from);
    cap_.push_back(0);
  }

  int max_flow(int s, int t) {
    int flow = 0;
    std::vector<int> via(head_.size());
    for (;;) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{s};
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        int u = queue.front();
        queue.pop_front();
        for (int a : head_[u]) {
          if (cap_[a] > 0 && via[to_[a]] == -1) {
            via[to_[a]] = a;
            queue.push_back(to_[a]);
          }
        }
      }
      if (via[t] == -1) return flow;
      int bottleneck = std::numeric_limits<int>::max();
      for (int v = t; v != s; v = to_[via[v] ^ 1])
        bottleneck = std::min(bottleneck, cap_[via[v]]);
      for (int v = t; v != s; v = to_[via[v] ^ 1]) {
        cap_[via[v]] -= bottleneck;
        cap_[via[v] ^ 1] += bottleneck;
      }
      flow += bottleneck;
    }
  }

  // Vertices reachable from s in the residual network.
  std::vector<std::uint8_t> reachable_from(int s) const {
    std::vector<std::uint8_t> seen(head_.size(), 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int a : head_[u])
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          queue.push_back(to_[a]);
        }
    }
    return seen;
  }

  // Vertices that can still reach t in the residual network.
  std::vector<std::uint8_t> reaching(int t) const {
    std::vector<std::uint8_t> seen(head_.size(), 0);
    std::deque<int> queue{t};
    seen[t] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      // arc a: u -> to_[a]; its reverse a ^ 1 runs to_[a] -> u
      for (int a : head_[u]) {
        const int v = to_[a];
        if (cap_[a ^ 1] > 0 && !seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
    return seen;
  }

 private:
  std::vector<std::vector<int>> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
};

}  // namespace

NodeSet nearest_separator(const Graph& graph, const Assignment& x,
                          const NodeSet& component) {
  const Assignment in_comp = membership(graph.size(), component);
  require_maximal(graph, x, in_comp);
  NodeSet sep;
  for (NodeId u : component)
    for (NodeId v : graph.neighbors(u))
      if (!x[v]) sep.push_back(v);
  std::sort(sep.begin(), sep.end());
  sep.erase(std::unique(sep.begin(), sep.end()), sep.end());
  return sep;
}

MinimalSeparator minimal_separator(const Graph& graph, const Assignment& x,
                                   const NodeSet& source, const NodeSet& sink) {
  const auto n = static_cast<int>(graph.size());
  const Assignment in_src = membership(graph.size(), source);
  const Assignment in_snk = membership(graph.size(), sink);
  for (NodeId v : source)
    if (!x[v] || in_snk[v])
      throw InputError("source must be active and disjoint from the sink");
  for (NodeId v : sink)
    if (!x[v]) throw InputError("sink must be active");

  {
    // the sides must not already be joined through active nodes
    std::vector<std::uint8_t> seen(graph.size(), 0);
    std::deque<NodeId> queue(source.begin(), source.end());
    for (NodeId s : source) seen[s] = 1;
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : graph.neighbors(u)) {
        if (!x[v] || seen[v]) continue;
        if (in_snk[v])
          throw InputError("source and sink are connected through active nodes");
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }

  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  const int s = 2 * n;
  const int t = 2 * n + 1;
  auto in_of = [&](NodeId v) {
    return in_src[v] ? s : in_snk[v] ? t : 2 * v;
  };
  auto out_of = [&](NodeId v) {
    return in_src[v] ? s : in_snk[v] ? t : 2 * v + 1;
  };

  SplitNetwork net(static_cast<std::size_t>(2 * n + 2));
  for (NodeId v = 0; v < n; ++v)
    if (!in_src[v] && !in_snk[v]) net.add_arc(2 * v, 2 * v + 1, x[v] ? kInf : 1);
  for (auto [u, v] : graph.edges()) {
    if (out_of(u) == in_of(v)) continue;  // inside the source or the sink
    net.add_arc(out_of(u), in_of(v), kInf);
    net.add_arc(out_of(v), in_of(u), kInf);
  }

  MinimalSeparator result;
  result.flow = net.max_flow(s, t);

  const auto from_s = net.reachable_from(s);
  const auto to_t = net.reaching(t);
  NodeSet near_source, near_sink;
  for (NodeId v = 0; v < n; ++v) {
    if (x[v]) continue;
    if (from_s[2 * v] && !from_s[2 * v + 1]) near_source.push_back(v);
    if (to_t[2 * v + 1] && !to_t[2 * v]) near_sink.push_back(v);
  }
  if (near_sink.size() < near_source.size()) {
    result.nodes = std::move(near_sink);
    result.source_side = false;
  } else {
    result.nodes = std::move(near_source);
  }
  return result;
}

EquidistantSeparator equidistant_separator(const Graph& graph,
                                           const Assignment& x,
                                           const NodeSet& component,
                                           const NodeSet& others) {
  const Assignment in_comp = membership(graph.size(), component);
  const Assignment in_other = membership(graph.size(), others);
  for (NodeId u : component) {
    if (!x[u] || in_other[u])
      throw InputError("component must be active and disjoint from the others");
    for (NodeId v : graph.neighbors(u))
      if (x[v] && !in_comp[v])
        throw InputError("component touches active node " + std::to_string(v));
  }

  const auto from_comp = inactive_distances(graph, x, component);
  const auto from_other = inactive_distances(graph, x, others);

  EquidistantSeparator result;
  result.reachable = false;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    const int dc = from_comp[v];
    const int d_o = from_other[v];
    if (dc == kUnreached) continue;
    if (d_o != kUnreached) result.reachable = true;
    if (dc == d_o) {
      result.nodes.push_back(static_cast<NodeId>(v));
    } else if (dc < d_o) {
      for (NodeId u : graph.neighbors(static_cast<NodeId>(v))) {
        if (!x[u] && from_other[u] < from_comp[u]) {
          result.nodes.push_back(static_cast<NodeId>(v));
          break;
        }
      }
    }
  }
  if (!result.reachable) result.nodes.clear();
  return result;
}

std::vector<NodeSet> k_separators(const Graph& graph, const Assignment& x,
                                  const NodeSet& component, int k,
                                  bool interleave) {
  if (k < 1) throw InputError("k must be >= 1");
  const Assignment in_comp = membership(graph.size(), component);
  for (NodeId u : component)
    for (NodeId v : graph.neighbors(u))
      if (x[v] && !in_comp[v]) return {};

  const std::size_t cap =
      std::min(static_cast<std::size_t>(k), component.size());
  auto layers = bfs_layers(graph, component,
                           [&](NodeId v) { return x[v] != 0; }, cap);

  // stop at the first layer from which another active node is one hop away
  std::size_t keep = layers.size();
  for (std::size_t t = 0; t < layers.size() && keep == layers.size(); ++t)
    for (NodeId v : layers[t]) {
      bool touches = false;
      for (NodeId u : graph.neighbors(v))
        if (x[u] && !in_comp[u]) touches = true;
      if (touches) {
        keep = t + 1;
        break;
      }
    }
  layers.resize(keep);

  if (!interleave) return layers;
  std::vector<NodeSet> even;
  for (std::size_t t = 1; t < layers.size(); t += 2) even.push_back(layers[t]);
  return even;
}

std::vector<NodeSet> find_separators(const Graph& graph, const Assignment& x,
                                     const NodeSet& component,
                                     const NodeSet& others, Strategy strategy) {
  std::vector<NodeSet> out;
  switch (strategy.kind) {
    case Strategy::Kind::Nearest:
      out.push_back(nearest_separator(graph, x, component));
      break;
    case Strategy::Kind::Minimal:
      out.push_back(minimal_separator(graph, x, component, others).nodes);
      break;
    case Strategy::Kind::Equidistant:
      out.push_back(equidistant_separator(graph, x, component, others).nodes);
      break;
    case Strategy::Kind::KNearest:
    case Strategy::Kind::KInterleave:
      out = k_separators(graph, x, component, strategy.k,
                         strategy.kind == Strategy::Kind::KInterleave);
      if (out.empty()) out.push_back(nearest_separator(graph, x, component));
      break;
  }
  return out;
}

}  // namespace mccs
