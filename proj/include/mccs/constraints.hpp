#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "mccs/graph.hpp"

namespace mccs {

enum class ConstraintKind : std::uint8_t {
  RootedSeparator,    // x_target <= sum_{k in support} x_k
  PairwiseSeparator,  // x_target + x_witness - 1 <= sum_{k in support} x_k
  LeafCut,            // 2 x_target <= sum_{k in support} x_k
};

struct Constraint {
  ConstraintKind kind = ConstraintKind::RootedSeparator;
  NodeId target = 0;
  NodeId witness = -1;  // only meaningful for PairwiseSeparator
  NodeSet support;      // sorted; separator set or leaf boundary
  std::size_t creation_index = 0;

  /// An empty support turns the inequality into a hard fixing of the target.
  bool forces_target_zero() const { return support.empty(); }

  bool same_inequality(const Constraint& o) const {
    return kind == o.kind && target == o.target && witness == o.witness &&
           support == o.support;
  }
};

std::string to_string(const Constraint& c);

/// Ternary labeling used by search nodes.
enum class Fix : std::uint8_t { Zero = 0, One = 1, Free = 2 };
using PartialAssignment = std::vector<Fix>;

PartialAssignment all_free(std::size_t n);

/// What a separator constraint is anchored to: the root in the rooted
/// formulation, or a witness node of the opposing component otherwise.
struct Anchor {
  enum class Kind : std::uint8_t { Root, Witness } kind = Kind::Root;
  NodeId node = 0;

  static Anchor root(NodeId r) { return {Kind::Root, r}; }
  static Anchor witness(NodeId j) { return {Kind::Witness, j}; }
};

/// One constraint per node of `component`. Rooted anchors give
/// RootedSeparator, witness anchors give PairwiseSeparator.
std::vector<Constraint> constraints_from_separator(const NodeSet& component,
                                                   const NodeSet& separator,
                                                   Anchor anchor);

/// LeafCut(i, N(i)) for every positive-weight node other than the root.
std::vector<Constraint> singleton_leaf_cuts(const Graph& graph,
                                            std::span<const double> weights,
                                            std::optional<NodeId> root = {});

/// LeafCut(i, N(U) \ U) for every i in U. U must be connected, strictly
/// positive and must not contain the root.
std::vector<Constraint> component_leaf_cut(const Graph& graph,
                                           std::span<const double> weights,
                                           const NodeSet& unfavourable,
                                           std::optional<NodeId> root = {});

bool is_violated(const Constraint& c, const Assignment& x);

/// Insertion-ordered constraint pool that ignores repeated inequalities and
/// keeps per-node occurrence lists for propagation.
class ConstraintStore {
 public:
  explicit ConstraintStore(std::size_t n_nodes = 0)
      : as_target_(n_nodes), in_support_(n_nodes) {}

  /// Returns false (and stores nothing) when the inequality is already known.
  bool add(Constraint c);
  std::size_t add_all(std::vector<Constraint> cs);

  std::size_t size() const { return constraints_.size(); }
  bool empty() const { return constraints_.empty(); }
  const Constraint& operator[](std::size_t i) const { return constraints_[i]; }
  auto begin() const { return constraints_.begin(); }
  auto end() const { return constraints_.end(); }

  /// Constraints with node i as target or witness; fixing i to 1 can only
  /// tighten these.
  const std::vector<std::size_t>& as_target(NodeId i) const {
    return as_target_[i];
  }
  /// Constraints with node i in the support; fixing i to 0 can only tighten
  /// these.
  const std::vector<std::size_t>& in_support(NodeId i) const {
    return in_support_[i];
  }

  /// First stored constraint violated by x, in creation order.
  std::optional<std::size_t> first_violated(const Assignment& x) const;

 private:
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> as_target_;
  std::vector<std::vector<std::size_t>> in_support_;
  std::unordered_multimap<std::size_t, std::size_t> by_hash_;
};

struct Fixings {
  std::vector<std::pair<NodeId, Fix>> values;
};
struct Conflict {
  std::size_t constraint;  // index into the store
};
struct Quiescent {};

using PropagationResult = std::variant<Fixings, Conflict, Quiescent>;

/// Unit propagation of the stored inequalities to a fixpoint. The input is
/// left untouched; the implied fixings are returned in the order derived.
PropagationResult propagate(const ConstraintStore& store,
                            const PartialAssignment& partial);

/// In-place variant used by the search. Initially only constraints that a node
/// in `touched` can tighten, or with index >= `first_unseen`, are examined;
/// this reaches the full fixpoint when `partial` was at a fixpoint for the
/// older constraints before the nodes in `touched` were fixed. Returns the
/// conflicting constraint, if any.
std::optional<std::size_t> propagate_in_place(
    const ConstraintStore& store, PartialAssignment& partial,
    std::span<const NodeId> touched, std::size_t first_unseen,
    std::vector<std::pair<NodeId, Fix>>* trail = nullptr);

}  // namespace mccs
