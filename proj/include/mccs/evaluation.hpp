#pragma once

#include <cstddef>
#include <span>

#include "mccs/graph.hpp"

namespace mccs {

struct Scores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t true_pos = 0;
  std::size_t false_pos = 0;
  std::size_t false_neg = 0;
};

/// Largest connected component of the thresholded labeling {i : w_i < 0}.
Assignment maxcomp(const Graph& graph, std::span<const double> weights);

/// Pixel-wise precision, recall and F1 of `pred` against `truth`. An empty
/// prediction has precision 1 when the truth is empty as well, else 0; the
/// same convention applies to recall.
Scores score(const Assignment& pred, const Assignment& truth);

double objective(const Assignment& x, std::span<const double> weights);

/// |a - b| <= rel_tol * max(|a|, |b|).
bool objectives_match(double a, double b, double rel_tol = 1e-4);

}  // namespace mccs
