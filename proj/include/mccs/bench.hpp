#pragma once

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mccs/evaluation.hpp"
#include "mccs/exact_solver.hpp"
#include "mccs/instance.hpp"

namespace mccs {

enum class SolverKind { Exact, Geodesic, Maxcomp };

std::string_view solver_name(SolverKind kind);
SolverKind parse_solver(std::string_view name);

struct RunSpec {
  SolverKind solver = SolverKind::Exact;
  Strategy strategy = Strategy::nearest();
  bool leaf_cuts = true;
  bool component_leaf_cuts = false;
  bool rooted = true;
  double rel_gap = 1e-4;
  std::optional<std::chrono::duration<double>> time_limit;
};

struct RunOutcome {
  SolveResult result;
  std::optional<NodeId> root;
  bool root_in_maxcomp = false;
  std::optional<Scores> scores;
};

/// Solves `instance` as described by `spec`. Geodesic runs need a root; in
/// unrooted mode they fall back to the instance root.
RunOutcome run_solver(const Instance& instance, const RunSpec& spec);

/// Single JSON object with the fixed stats field names.
std::string stats_json(const RunSpec& spec, const RunOutcome& outcome);

struct BenchInstance {
  std::string name;
  Instance instance;
};

struct BenchOptions {
  std::vector<SolverKind> solvers{SolverKind::Exact, SolverKind::Geodesic,
                                  SolverKind::Maxcomp};
  std::vector<Strategy::Kind> strategies = all_strategy_kinds();
  int k = 4;
  std::vector<bool> leaf_cut_settings{true, false};
  bool rooted = true;
  double rel_gap = 1e-4;
  std::optional<std::chrono::duration<double>> time_limit;
  unsigned jobs = 1;
};

struct BenchRow {
  std::string instance;
  SolverKind solver = SolverKind::Exact;
  std::optional<Strategy> strategy;  // exact runs only
  std::optional<bool> leaf_cuts;     // exact runs only
  double objective = 0.0;
  std::string status;
  double wall_time_ms = 0.0;
  std::uint64_t search_nodes = 0;
  std::uint64_t constraints = 0;
  std::optional<Scores> scores;
};

/// Runs the solver x strategy x leaf-cut matrix over all instances on a
/// bounded worker pool. Rows come back sorted by instance name, solver,
/// strategy and leaf-cut setting.
std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& instances,
                                const BenchOptions& options);

inline constexpr std::string_view kBenchHeader =
    "instance,solver,strategy,k,leaf_cuts,objective,status,wall_time_ms,"
    "search_nodes,constraints,f1,precision,recall";

/// With `timing` false the wall_time_ms column is left empty so that the
/// output depends on the inputs alone.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows,
                     bool timing = true);

/// Seeded suite of generated grids named `gen-<extents>-r<radius>-s<seed>`.
std::vector<BenchInstance> generated_suite(const RandomMapOptions& base,
                                           std::size_t count);

}  // namespace mccs
