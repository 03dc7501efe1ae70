#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mccs/constraints.hpp"
#include "mccs/graph.hpp"
#include "mccs/separators.hpp"

namespace mccs {

enum class SolveStatus { Optimal, GapReached, TimeLimit, NodeLimit, Infeasible };

std::string_view status_name(SolveStatus status);

struct SolverStats {
  std::uint64_t search_nodes_expanded = 0;
  std::uint64_t constraints_generated = 0;
  std::uint64_t incumbent_updates = 0;
  std::chrono::duration<double> wall_time{0.0};
};

struct SolveResult {
  Assignment assignment;
  double objective = 0.0;
  SolveStatus status = SolveStatus::Infeasible;
  SolverStats stats;
  /// Proven lower bound on the optimum at termination.
  double lower_bound = 0.0;
  /// Incumbent objective after every update, in order.
  std::vector<double> incumbent_history;
};

struct SolverConfig {
  Strategy strategy = Strategy::nearest();
  /// Rooted formulation when set; the root is fixed active.
  std::optional<NodeId> root;
  double rel_gap = 1e-4;
  std::optional<std::chrono::duration<double>> time_limit;
  std::optional<std::uint64_t> node_limit;
  bool use_singleton_leaf_cuts = true;
  bool use_component_leaf_cuts = false;
};

/// Sets every free node to 1 iff its weight is negative. The result attains
/// the objective-only lower bound of `partial`.
Assignment greedy_completion(const PartialAssignment& partial,
                             std::span<const double> weights);

/// Sum of fixed-active weights plus the negative part of every free weight.
double completion_bound(const PartialAssignment& partial,
                        std::span<const double> weights);

/// Splits `partial` by the disjunction encoded in the violated inequality.
/// The children partition the completions of `partial` that satisfy it, and
/// each fixes at least one more node. No children means no completion of
/// `partial` can satisfy the inequality.
std::vector<PartialAssignment> branch(const PartialAssignment& partial,
                                      const Constraint& violated);

/// Adds separator constraints for every active component of `x` that is cut
/// off from the root (rooted) or from the first component (unrooted).
/// Returns the number of constraints that were new to `store`; zero exactly
/// when `x` is feasible.
std::size_t separate(const Graph& graph, const Assignment& x,
                     const SolverConfig& config, ConstraintStore& store);

/// Best-first branch-and-cut over fixings with lazily generated separator
/// inequalities.
SolveResult solve_exact(const Graph& graph, std::span<const double> weights,
                        const SolverConfig& config);

}  // namespace mccs
