#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mccs/graph.hpp"
#include "mccs/weights.hpp"

namespace mccs {

struct Instance {
  Graph graph;
  NodeWeights weights;
  std::optional<NodeId> root;
  std::optional<Assignment> ground_truth;
  /// Per-node probabilities when the instance came from a probability map.
  std::vector<double> probabilities;
};

enum class FileFormat { Grid, Sparse };

/// Grid probability format: a `grid <d> <n1> ... <nd>` header line followed by
/// exactly n1 * ... * nd whitespace-separated values in row-major order.
Instance parse_grid_probabilities(std::istream& in,
                                  double eps = kDefaultProbabilityClamp);
Instance read_grid_probabilities(const std::filesystem::path& path,
                                 double eps = kDefaultProbabilityClamp);

/// Sparse format: lines `n <count>`, `w <i> <weight>`, `e <i> <j>`, and an
/// optional `r <root>`. '#' starts a comment. Every node needs a weight.
Instance parse_sparse_graph(std::istream& in);
Instance read_sparse_graph(const std::filesystem::path& path);

/// Dispatches on the first keyword of the file.
Instance read_instance(const std::filesystem::path& path);
FileFormat detect_format(const std::filesystem::path& path);

/// Grid header plus one value per node, each printed with 17 significant
/// digits.
void write_grid_values(std::ostream& out, const GridMeta& grid,
                       const std::vector<double>& values);
void write_grid_mask(std::ostream& out, const GridMeta& grid,
                     const Assignment& x);
void write_sparse_graph(std::ostream& out, const Graph& graph,
                        const NodeWeights& weights,
                        std::optional<NodeId> root = {});
/// `n <count>` followed by one `v <i>` line per active node.
void write_node_list(std::ostream& out, const Assignment& x);

/// Reads a 0/1 mask in grid format or a node list (`n` / `v` lines).
Assignment read_mask(const std::filesystem::path& path);
Assignment parse_mask(std::istream& in);

/// Writes `x` in the same flavour as the instance it belongs to.
void write_solution(std::ostream& out, const Instance& instance,
                    const Assignment& x);

std::string format_double(double v);

struct RandomMapOptions {
  std::vector<std::int32_t> extents;
  int smoothing_radius = 1;  // number of 3^d box-filter passes
  std::uint64_t seed = 0;
  /// Shifts the map towards background; 0 keeps it symmetric about 1/2.
  double background_bias = 0.0;
};

/// Reproducible synthetic probability map: uniform noise box-filtered
/// `smoothing_radius` times, standardized and squashed through a logistic.
std::vector<double> gen_random_probabilities(const RandomMapOptions& options);
Instance gen_random(const RandomMapOptions& options,
                    double eps = kDefaultProbabilityClamp);

}  // namespace mccs
