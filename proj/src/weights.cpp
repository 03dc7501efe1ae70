#include "mccs/weights.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mccs {

double prob_to_weight(double p, double eps) {
  if (!(p >= 0.0 && p <= 1.0))
    throw InputError("probability outside [0, 1]: " + std::to_string(p));
  if (!(eps > 0.0 && eps < 0.5))
    throw InputError("probability clamp must lie in (0, 0.5)");
  const double q = std::clamp(p, eps, 1.0 - eps);
  return -std::log(q / (1.0 - q));
}

NodeWeights probabilities_to_weights(std::span<const double> probabilities,
                                     double eps) {
  NodeWeights w;
  w.reserve(probabilities.size());
  for (double p : probabilities) w.push_back(prob_to_weight(p, eps));
  return w;
}

NodeSet largest_favourable_component(const Graph& graph,
                                     std::span<const double> weights) {
  auto comps = connected_components(
      graph, [&](NodeId i) { return weights[i] < 0.0; });
  const NodeSet* best = nullptr;
  double best_total = 0.0;
  for (const auto& c : comps) {
    double total = 0.0;
    for (NodeId i : c) total += weights[i];
    // comps come ordered by smallest member, so strict comparisons keep the
    // lower-index winner on full ties
    if (!best || c.size() > best->size() ||
        (c.size() == best->size() && total < best_total)) {
      best = &c;
      best_total = total;
    }
  }
  return best ? *best : NodeSet{};
}

NodeId select_root(const Graph& graph, std::span<const double> weights) {
  if (graph.size() == 0) throw InputError("select_root on an empty graph");
  NodeSet candidates = largest_favourable_component(graph, weights);
  if (candidates.empty()) {
    candidates.resize(graph.size());
    for (std::size_t i = 0; i < graph.size(); ++i)
      candidates[i] = static_cast<NodeId>(i);
  }
  NodeId root = candidates.front();
  for (NodeId i : candidates)
    if (weights[i] < weights[root]) root = i;
  return root;
}

}  // namespace mccs
