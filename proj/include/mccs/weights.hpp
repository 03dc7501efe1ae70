#pragma once

#include <span>
#include <vector>

#include "mccs/graph.hpp"

namespace mccs {

/// Per-node activation cost. Negative entries are favourable.
using NodeWeights = std::vector<double>;

inline constexpr double kDefaultProbabilityClamp = 1e-6;

/// Negative log-odds of p, with p clamped to [eps, 1 - eps].
double prob_to_weight(double p, double eps = kDefaultProbabilityClamp);

NodeWeights probabilities_to_weights(std::span<const double> probabilities,
                                     double eps = kDefaultProbabilityClamp);

/// Strongest node of the largest favourable component.
///
/// Components of {i : w_i < 0} are ranked by node count, then by lower total
/// weight, then by smallest member. The minimum-weight node of the winner is
/// returned (ties to the smaller index). Without any negative weight the
/// global minimum-weight node is returned.
NodeId select_root(const Graph& graph, std::span<const double> weights);

/// Largest favourable component under the same ranking as select_root; empty
/// when no weight is negative.
NodeSet largest_favourable_component(const Graph& graph,
                                     std::span<const double> weights);

}  // namespace mccs
