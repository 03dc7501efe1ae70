#include "mccs/exact_solver.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "mccs/evaluation.hpp"

namespace mccs {

std::string_view status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::GapReached: return "gap";
    case SolveStatus::TimeLimit: return "time_limit";
    case SolveStatus::NodeLimit: return "node_limit";
    case SolveStatus::Infeasible: return "infeasible";
  }
  return "?";
}

Assignment greedy_completion(const PartialAssignment& partial,
                             std::span<const double> weights) {
  Assignment x(partial.size(), 0);
  for (std::size_t i = 0; i < partial.size(); ++i) {
    switch (partial[i]) {
      case Fix::One: x[i] = 1; break;
      case Fix::Zero: x[i] = 0; break;
      case Fix::Free: x[i] = weights[i] < 0.0 ? 1 : 0; break;
    }
  }
  return x;
}

double completion_bound(const PartialAssignment& partial,
                        std::span<const double> weights) {
  double bound = 0.0;
  for (std::size_t i = 0; i < partial.size(); ++i) {
    if (partial[i] == Fix::One)
      bound += weights[i];
    else if (partial[i] == Fix::Free)
      bound += std::min(0.0, weights[i]);
  }
  return bound;
}

namespace {

// Children for "target (and witness) active => some support node active",
// listing support nodes in ascending order with the earlier ones fixed 0.
void support_children(const PartialAssignment& base, const NodeSet& support,
                      std::vector<PartialAssignment>& out) {
  std::vector<NodeId> earlier;
  for (NodeId k : support) {
    if (base[k] != Fix::Free) continue;
    PartialAssignment child = base;
    child[k] = Fix::One;
    for (NodeId e : earlier) child[e] = Fix::Zero;
    out.push_back(std::move(child));
    earlier.push_back(k);
  }
}

}  // namespace

std::vector<PartialAssignment> branch(const PartialAssignment& partial,
                                      const Constraint& violated) {
  std::vector<PartialAssignment> out;
  switch (violated.kind) {
    case ConstraintKind::RootedSeparator: {
      const NodeId t = violated.target;
      if (partial[t] == Fix::Zero) break;
      if (partial[t] == Fix::Free) {
        out.push_back(partial);
        out.back()[t] = Fix::Zero;
      }
      PartialAssignment active = partial;
      active[t] = Fix::One;
      support_children(active, violated.support, out);
      break;
    }
    case ConstraintKind::PairwiseSeparator: {
      const NodeId t = violated.target;
      const NodeId j = violated.witness;
      if (partial[t] == Fix::Zero || partial[j] == Fix::Zero) break;
      if (partial[t] == Fix::Free) {
        out.push_back(partial);
        out.back()[t] = Fix::Zero;
      }
      PartialAssignment active = partial;
      active[t] = Fix::One;
      if (partial[j] == Fix::Free) {
        out.push_back(active);
        out.back()[j] = Fix::Zero;
      }
      active[j] = Fix::One;
      support_children(active, violated.support, out);
      break;
    }
    case ConstraintKind::LeafCut: {
      for (NodeId k : violated.support) {
        if (partial[k] != Fix::Free) continue;
        out.push_back(partial);
        out.back()[k] = Fix::Zero;
        out.push_back(partial);
        out.back()[k] = Fix::One;
        break;
      }
      break;
    }
  }
  return out;
}

std::size_t separate(const Graph& graph, const Assignment& x,
                     const SolverConfig& config, ConstraintStore& store) {
  const auto comps = connected_components(graph, x);
  if (comps.size() <= 1 && (!config.root || comps.empty() ||
                            std::binary_search(comps[0].begin(), comps[0].end(),
                                               *config.root)))
    return 0;

  const NodeSet all_active = active_nodes(x);
  std::optional<Anchor> anchor;
  std::size_t anchor_comp = 0;
  if (config.root) {
    anchor = Anchor::root(*config.root);
    anchor_comp = comps.size();
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (std::binary_search(comps[c].begin(), comps[c].end(), *config.root))
        anchor_comp = c;
  } else {
    anchor = Anchor::witness(comps[0].front());
    anchor_comp = 0;
  }

  std::size_t added = 0;
  NodeSet others;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (c == anchor_comp) continue;
    const NodeSet& comp = comps[c];
    others.clear();
    std::set_difference(all_active.begin(), all_active.end(), comp.begin(),
                        comp.end(), std::back_inserter(others));
    for (const NodeSet& sep :
         find_separators(graph, x, comp, others, config.strategy))
      added += store.add_all(constraints_from_separator(comp, sep, *anchor));
  }
  return added;
}

namespace {

struct SearchNode {
  PartialAssignment fix;
  std::vector<NodeId> touched;  // nodes fixed since the parent's fixpoint
  std::size_t store_seen = 0;   // constraints the parent was propagated against
  double bound = 0.0;
};

struct QueueEntry {
  double bound;
  std::size_t id;
  bool operator>(const QueueEntry& o) const {
    return bound != o.bound ? bound > o.bound : id > o.id;
  }
};

}  // namespace

SolveResult solve_exact(const Graph& graph, std::span<const double> weights,
                        const SolverConfig& config) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const std::size_t n = graph.size();
  if (n == 0) throw InputError("solve_exact on an empty graph");
  if (weights.size() != n) throw InputError("weights do not match the graph");
  if (config.rel_gap < 0.0) throw InputError("relative gap must be >= 0");
  if (config.root && (*config.root < 0 || static_cast<std::size_t>(*config.root) >= n))
    throw InputError("root out of range");

  SolveResult result;
  ConstraintStore store(n);
  if (config.use_singleton_leaf_cuts)
    store.add_all(singleton_leaf_cuts(graph, weights, config.root));
  if (config.use_component_leaf_cuts) {
    auto comps = connected_components(graph, [&](NodeId i) {
      return weights[i] > 0.0 && (!config.root || *config.root != i);
    });
    for (const auto& u : comps)
      if (u.size() >= 2)
        store.add_all(component_leaf_cut(graph, weights, u, config.root));
  }
  const std::size_t upfront = store.size();

  // trivially feasible starting point: the root alone, or nothing
  result.assignment.assign(n, 0);
  if (config.root) result.assignment[*config.root] = 1;
  result.objective = objective(result.assignment, weights);
  result.status = SolveStatus::Optimal;
  result.incumbent_history.push_back(result.objective);
  result.stats.incumbent_updates = 1;

  auto prune_threshold = [&] {
    return result.objective - config.rel_gap * std::abs(result.objective);
  };

  std::vector<SearchNode> pool;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>,
                      std::greater<QueueEntry>>
      open;
  double pruned_bound = std::numeric_limits<double>::infinity();

  {
    SearchNode root_node;
    root_node.fix = all_free(n);
    if (config.root) {
      root_node.fix[*config.root] = Fix::One;
      root_node.touched.push_back(*config.root);
    }
    root_node.bound = completion_bound(root_node.fix, weights);
    open.push({root_node.bound, 0});
    pool.push_back(std::move(root_node));
  }

  auto finish = [&](SolveStatus status) {
    double lb = std::min(pruned_bound, result.objective);
    if (!open.empty()) lb = std::min(lb, open.top().bound);
    result.lower_bound = lb;
    if (status == SolveStatus::Optimal && lb < result.objective)
      status = SolveStatus::GapReached;
    result.status = status;
    result.stats.constraints_generated = store.size() - upfront;
    result.stats.wall_time = Clock::now() - start;
    return result;
  };

  while (!open.empty()) {
    if (config.node_limit &&
        result.stats.search_nodes_expanded >= *config.node_limit)
      return finish(SolveStatus::NodeLimit);
    if (config.time_limit && (result.stats.search_nodes_expanded & 63) == 0 &&
        Clock::now() - start >= *config.time_limit)
      return finish(SolveStatus::TimeLimit);

    const QueueEntry entry = open.top();
    open.pop();
    SearchNode node = std::move(pool[entry.id]);
    pool[entry.id] = SearchNode{};

    if (node.bound >= prune_threshold()) {
      pruned_bound = std::min(pruned_bound, node.bound);
      continue;
    }
    if (propagate_in_place(store, node.fix, node.touched, node.store_seen))
      continue;
    node.bound = completion_bound(node.fix, weights);
    if (node.bound >= prune_threshold()) {
      pruned_bound = std::min(pruned_bound, node.bound);
      continue;
    }

    ++result.stats.search_nodes_expanded;
    const Assignment x = greedy_completion(node.fix, weights);
    const std::size_t seen = store.size();

    std::optional<std::size_t> violated = store.first_violated(x);
    if (!violated && separate(graph, x, config, store) > 0) violated = seen;

    if (!violated) {
      // the completion attains the node bound, so nothing below can do better
      result.assignment = x;
      result.objective = objective(x, weights);
      result.incumbent_history.push_back(result.objective);
      ++result.stats.incumbent_updates;
      continue;
    }

    for (auto& child_fix : branch(node.fix, store[*violated])) {
      SearchNode child;
      for (std::size_t i = 0; i < n; ++i)
        if (child_fix[i] != node.fix[i])
          child.touched.push_back(static_cast<NodeId>(i));
      child.fix = std::move(child_fix);
      child.store_seen = seen;
      child.bound = completion_bound(child.fix, weights);
      if (child.bound >= prune_threshold()) {
        pruned_bound = std::min(pruned_bound, child.bound);
        continue;
      }
      open.push({child.bound, pool.size()});
      pool.push_back(std::move(child));
    }
  }
  return finish(SolveStatus::Optimal);
}

}  // namespace mccs
