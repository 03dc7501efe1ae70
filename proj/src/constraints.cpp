#include "mccs/constraints.hpp"

#include <algorithm>
#include <sstream>

namespace mccs {

namespace {

std::size_t hash_of(const Constraint& c) {
  std::size_t h = static_cast<std::size_t>(c.kind) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(static_cast<std::size_t>(c.target));
  mix(static_cast<std::size_t>(c.witness + 1));
  for (NodeId k : c.support) mix(static_cast<std::size_t>(k));
  return h;
}

bool contains(const NodeSet& sorted, NodeId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

std::string to_string(const Constraint& c) {
  std::ostringstream os;
  auto sum = [&] {
    if (c.support.empty()) {
      os << "0";
      return;
    }
    for (std::size_t i = 0; i < c.support.size(); ++i)
      os << (i ? " + " : "") << "x_" << c.support[i];
  };
  switch (c.kind) {
    case ConstraintKind::RootedSeparator:
      os << "x_" << c.target << " <= ";
      break;
    case ConstraintKind::PairwiseSeparator:
      os << "x_" << c.target << " + x_" << c.witness << " - 1 <= ";
      break;
    case ConstraintKind::LeafCut:
      os << "2 x_" << c.target << " <= ";
      break;
  }
  sum();
  return os.str();
}

PartialAssignment all_free(std::size_t n) { return PartialAssignment(n, Fix::Free); }

std::vector<Constraint> constraints_from_separator(const NodeSet& component,
                                                   const NodeSet& separator,
                                                   Anchor anchor) {
  NodeSet sep = separator;
  std::sort(sep.begin(), sep.end());
  sep.erase(std::unique(sep.begin(), sep.end()), sep.end());
  for (NodeId i : component)
    if (contains(sep, i))
      throw InputError("separator overlaps the component at node " +
                       std::to_string(i));
  if (contains(sep, anchor.node))
    throw InputError("separator contains its anchor node " +
                     std::to_string(anchor.node));
  if (std::find(component.begin(), component.end(), anchor.node) !=
      component.end())
    throw InputError("anchor node " + std::to_string(anchor.node) +
                     " lies inside the separated component");

  std::vector<Constraint> out;
  out.reserve(component.size());
  for (NodeId i : component) {
    Constraint c;
    c.support = sep;
    c.target = i;
    if (anchor.kind == Anchor::Kind::Root) {
      c.kind = ConstraintKind::RootedSeparator;
    } else {
      c.kind = ConstraintKind::PairwiseSeparator;
      c.witness = anchor.node;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Constraint> singleton_leaf_cuts(const Graph& graph,
                                            std::span<const double> weights,
                                            std::optional<NodeId> root) {
  std::vector<Constraint> out;
  for (NodeId i = 0; i < static_cast<NodeId>(graph.size()); ++i) {
    if (!(weights[i] > 0.0) || (root && *root == i)) continue;
    auto adj = graph.neighbors(i);
    Constraint c;
    c.kind = ConstraintKind::LeafCut;
    c.target = i;
    c.support.assign(adj.begin(), adj.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Constraint> component_leaf_cut(const Graph& graph,
                                           std::span<const double> weights,
                                           const NodeSet& unfavourable,
                                           std::optional<NodeId> root) {
  if (unfavourable.empty()) return {};
  NodeSet u = unfavourable;
  std::sort(u.begin(), u.end());
  for (NodeId i : u) {
    if (!(weights[i] > 0.0))
      throw InputError("leaf-cut set contains favourable node " +
                       std::to_string(i));
    if (root && *root == i)
      throw InputError("leaf-cut set contains the root");
  }
  Assignment member = indicator(graph.size(), u);
  if (connected_components(graph, member).size() != 1)
    throw InputError("leaf-cut set is not connected");

  NodeSet boundary;
  for (NodeId k : u)
    for (NodeId j : graph.neighbors(k))
      if (!member[j]) boundary.push_back(j);
  std::sort(boundary.begin(), boundary.end());
  boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());

  std::vector<Constraint> out;
  for (NodeId i : u) {
    Constraint c;
    c.kind = ConstraintKind::LeafCut;
    c.target = i;
    c.support = boundary;
    out.push_back(std::move(c));
  }
  return out;
}

bool is_violated(const Constraint& c, const Assignment& x) {
  int rhs = 0;
  for (NodeId k : c.support) rhs += x[k] ? 1 : 0;
  switch (c.kind) {
    case ConstraintKind::RootedSeparator:
      return (x[c.target] ? 1 : 0) > rhs;
    case ConstraintKind::PairwiseSeparator:
      return (x[c.target] ? 1 : 0) + (x[c.witness] ? 1 : 0) - 1 > rhs;
    case ConstraintKind::LeafCut:
      return 2 * (x[c.target] ? 1 : 0) > rhs;
  }
  return false;
}

bool ConstraintStore::add(Constraint c) {
  const std::size_t h = hash_of(c);
  auto [lo, hi] = by_hash_.equal_range(h);
  for (auto it = lo; it != hi; ++it)
    if (constraints_[it->second].same_inequality(c)) return false;

  const std::size_t idx = constraints_.size();
  c.creation_index = idx;
  auto note = [idx](std::vector<std::vector<std::size_t>>& lists, NodeId v) {
    if (static_cast<std::size_t>(v) >= lists.size())
      lists.resize(static_cast<std::size_t>(v) + 1);
    auto& list = lists[v];
    if (list.empty() || list.back() != idx) list.push_back(idx);
  };
  note(as_target_, c.target);
  if (c.kind == ConstraintKind::PairwiseSeparator) note(as_target_, c.witness);
  for (NodeId k : c.support) note(in_support_, k);

  constraints_.push_back(std::move(c));
  by_hash_.emplace(h, idx);
  return true;
}

std::size_t ConstraintStore::add_all(std::vector<Constraint> cs) {
  std::size_t added = 0;
  for (auto& c : cs) added += add(std::move(c)) ? 1 : 0;
  return added;
}

std::optional<std::size_t> ConstraintStore::first_violated(
    const Assignment& x) const {
  // a violated inequality always has an active target
  std::optional<std::size_t> first;
  for (std::size_t v = 0; v < x.size() && v < as_target_.size(); ++v) {
    if (!x[v]) continue;
    for (std::size_t ci : as_target_[v]) {
      if (first && ci >= *first) break;
      if (is_violated(constraints_[ci], x)) {
        first = ci;
        break;
      }
    }
  }
  return first;
}

namespace {

enum class Outcome { Nothing, Fixed, Conflict };

// Applies the unit rule of a single constraint; newly fixed nodes are appended
// to `fixed`. The support scan stops as soon as no implication is possible.
Outcome apply_rule(const Constraint& c, PartialAssignment& p,
                   std::vector<NodeId>& fixed) {
  auto set = [&](NodeId v, Fix f) {
    p[v] = f;
    fixed.push_back(v);
  };

  // Clause-shaped kinds: `need_target_zero` means every support node must be 0
  // before anything follows (the target side can be forced to 0); otherwise
  // the target side is all 1 and a single free support node gets forced to 1.
  auto clause = [&](bool targets_all_one, NodeId to_zero) -> Outcome {
    int frees = 0;
    NodeId some_free = -1;
    for (NodeId k : c.support) {
      if (p[k] == Fix::One) return Outcome::Nothing;
      if (p[k] == Fix::Free) {
        if (!targets_all_one || ++frees > 1) return Outcome::Nothing;
        some_free = k;
      }
    }
    if (!targets_all_one) {
      set(to_zero, Fix::Zero);
      return Outcome::Fixed;
    }
    if (frees == 0) return Outcome::Conflict;
    set(some_free, Fix::One);
    return Outcome::Fixed;
  };

  switch (c.kind) {
    case ConstraintKind::RootedSeparator: {
      const Fix t = p[c.target];
      if (t == Fix::Zero) return Outcome::Nothing;
      return clause(t == Fix::One, c.target);
    }
    case ConstraintKind::PairwiseSeparator: {
      const Fix a = p[c.target];
      const Fix b = p[c.witness];
      if (a == Fix::Zero || b == Fix::Zero) return Outcome::Nothing;
      if (a == Fix::Free && b == Fix::Free) return Outcome::Nothing;
      if (a == Fix::One && b == Fix::One) return clause(true, -1);
      return clause(false, a == Fix::One ? c.witness : c.target);
    }
    case ConstraintKind::LeafCut: {
      const Fix t = p[c.target];
      if (t == Fix::Zero) return Outcome::Nothing;
      int ones = 0;
      int open = 0;  // ones + frees
      for (NodeId k : c.support) {
        if (p[k] == Fix::Zero) continue;
        if (++open > 2) return Outcome::Nothing;
        if (p[k] == Fix::One) ++ones;
      }
      if (ones >= 2) return Outcome::Nothing;
      if (t == Fix::One) {
        if (open < 2) return Outcome::Conflict;
        for (NodeId k : c.support)
          if (p[k] == Fix::Free) set(k, Fix::One);
        return Outcome::Fixed;
      }
      if (open < 2) {
        set(c.target, Fix::Zero);
        return Outcome::Fixed;
      }
      return Outcome::Nothing;
    }
  }
  return Outcome::Nothing;
}

}  // namespace

std::optional<std::size_t> propagate_in_place(
    const ConstraintStore& store, PartialAssignment& partial,
    std::span<const NodeId> touched, std::size_t first_unseen,
    std::vector<std::pair<NodeId, Fix>>* trail) {
  thread_local std::vector<std::uint8_t> queued;
  thread_local std::vector<std::size_t> queue;
  thread_local std::vector<NodeId> fixed;
  queued.assign(store.size(), 0);
  queue.clear();

  auto enqueue_for = [&](NodeId v) {
    const auto& lists =
        partial[v] == Fix::One ? store.as_target(v) : store.in_support(v);
    for (std::size_t ci : lists)
      if (!queued[ci]) {
        queued[ci] = 1;
        queue.push_back(ci);
      }
  };
  for (NodeId v : touched)
    if (partial[v] != Fix::Free) enqueue_for(v);
  for (std::size_t ci = first_unseen; ci < store.size(); ++ci)
    if (!queued[ci]) {
      queued[ci] = 1;
      queue.push_back(ci);
    }

  while (!queue.empty()) {
    const std::size_t ci = queue.back();
    queue.pop_back();
    queued[ci] = 0;
    fixed.clear();
    if (apply_rule(store[ci], partial, fixed) == Outcome::Conflict) return ci;
    for (NodeId v : fixed) {
      if (trail) trail->emplace_back(v, partial[v]);
      enqueue_for(v);
    }
  }
  return std::nullopt;
}

PropagationResult propagate(const ConstraintStore& store,
                            const PartialAssignment& partial) {
  PartialAssignment work = partial;
  std::vector<std::pair<NodeId, Fix>> trail;
  if (auto conflict = propagate_in_place(store, work, {}, 0, &trail))
    return Conflict{*conflict};
  if (trail.empty()) return Quiescent{};
  return Fixings{std::move(trail)};
}

}  // namespace mccs
