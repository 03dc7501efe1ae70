#include "mccs/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "mccs/weights.hpp"

namespace mccs {

Assignment maxcomp(const Graph& graph, std::span<const double> weights) {
  if (weights.size() != graph.size())
    throw InputError("weights do not match the graph");
  return indicator(graph.size(), largest_favourable_component(graph, weights));
}

Scores score(const Assignment& pred, const Assignment& truth) {
  if (pred.size() != truth.size())
    throw InputError("prediction and truth differ in length");
  Scores s;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] && truth[i]) ++s.true_pos;
    else if (pred[i]) ++s.false_pos;
    else if (truth[i]) ++s.false_neg;
  }
  const bool both_empty = s.true_pos + s.false_pos + s.false_neg == 0;
  auto ratio = [&](std::size_t num, std::size_t den) {
    if (den == 0) return both_empty ? 1.0 : 0.0;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  s.precision = ratio(s.true_pos, s.true_pos + s.false_pos);
  s.recall = ratio(s.true_pos, s.true_pos + s.false_neg);
  s.f1 = s.precision + s.recall > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

double objective(const Assignment& x, std::span<const double> weights) {
  if (x.size() != weights.size())
    throw InputError("assignment and weights differ in length");
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) sum += weights[i];
  return sum;
}

bool objectives_match(double a, double b, double rel_tol) {
  if (rel_tol < 0.0) throw InputError("tolerance must be >= 0");
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace mccs
