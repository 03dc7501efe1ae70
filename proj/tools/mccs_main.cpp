// mccs: command-line front end for the connected subgraph solvers.
//
//   mccs solve <instance> [--solver exact|geodesic|maxcomp] [--strategy ...]
//   mccs gen --extents 8 8 [--radius 1] [--seed 0] [--bias 0] [--out map.txt]
//   mccs eval <pred-mask> --gt <truth-mask> [--instance <file>]
//   mccs bench [<instance> ...] [--suite 25 --extents 8 8 ...] [--out runs.csv]

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mccs/bench.hpp"
#include "mccs/evaluation.hpp"
#include "mccs/instance.hpp"

namespace {

using namespace mccs;

const std::vector<std::string> kStrategyNames = {
    "nearest", "minimal", "equidistant", "k-nearest", "k-interleave"};

struct SolveArgs {
  std::string instance;
  std::string solver = "exact";
  std::string strategy = "nearest";
  int k = 4;
  double gap = 1e-4;
  std::optional<double> time_limit;
  std::string root = "auto";
  bool no_leaf_cuts = false;
  bool component_cuts = false;
  bool unrooted = false;
  std::string gt;
  std::string out;
  std::string stats;
};

struct GenArgs {
  std::vector<int> extents{8, 8};
  int radius = 1;
  std::uint64_t seed = 0;
  double bias = 0.0;
  std::string truth_out;
  std::string out;
};

struct EvalArgs {
  std::string pred;
  std::string gt;
  std::string instance;
};

struct BenchArgs {
  std::vector<std::string> instances;
  std::size_t suite = 0;
  std::vector<int> extents{8, 8};
  int radius = 1;
  std::uint64_t seed = 0;
  double bias = 1.0;
  std::vector<std::string> strategies = kStrategyNames;
  std::vector<std::string> solvers{"exact", "geodesic", "maxcomp"};
  std::string leaf_cuts = "both";
  int k = 4;
  double gap = 1e-4;
  std::optional<double> time_limit;
  bool unrooted = false;
  unsigned jobs = 1;
  bool no_timing = false;
  std::string out;
};

// Writes through `out` when a path is given, else to stdout.
template <typename F>
void emit(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  write(f);
}

void apply_root(Instance& inst, const std::string& root) {
  if (root == "auto") return;
  std::size_t used = 0;
  long long r = -1;
  try {
    r = std::stoll(root, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != root.size() || r < 0 || static_cast<std::size_t>(r) >= inst.graph.size())
    throw InputError("--root must be 'auto' or a node index below " +
                     std::to_string(inst.graph.size()));
  inst.root = static_cast<NodeId>(r);
}

int run_solve(const SolveArgs& a) {
  Instance inst = read_instance(a.instance);
  apply_root(inst, a.root);
  if (!a.gt.empty()) {
    inst.ground_truth = read_mask(a.gt);
    if (inst.ground_truth->size() != inst.graph.size())
      throw InputError("ground truth has " + std::to_string(inst.ground_truth->size()) +
                       " nodes, instance has " + std::to_string(inst.graph.size()));
  }
  RunSpec spec;
  spec.solver = parse_solver(a.solver);
  spec.strategy = parse_strategy(a.strategy, a.k);
  spec.leaf_cuts = !a.no_leaf_cuts;
  spec.component_leaf_cuts = a.component_cuts;
  spec.rooted = !a.unrooted;
  spec.rel_gap = a.gap;
  if (a.time_limit) spec.time_limit = std::chrono::duration<double>(*a.time_limit);
  const RunOutcome o = run_solver(inst, spec);
  if (!a.out.empty())
    emit(a.out, [&](std::ostream& os) { write_solution(os, inst, o.result.assignment); });
  const std::string json = stats_json(spec, o);
  if (a.stats.empty())
    std::cout << json << '\n';
  else
    emit(a.stats, [&](std::ostream& os) { os << json << '\n'; });
  return 0;
}

int run_gen(const GenArgs& a) {
  RandomMapOptions o;
  o.extents.assign(a.extents.begin(), a.extents.end());
  o.smoothing_radius = a.radius;
  o.seed = a.seed;
  o.background_bias = a.bias;
  const std::vector<double> p = gen_random_probabilities(o);
  const Graph g = build_grid(o.extents);
  emit(a.out, [&](std::ostream& os) { write_grid_values(os, *g.grid(), p); });
  if (!a.truth_out.empty()) {
    // thresholded map, a convenient stand-in mask for `eval`
    Assignment t(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) t[i] = p[i] > 0.5 ? 1 : 0;
    emit(a.truth_out, [&](std::ostream& os) { write_grid_mask(os, *g.grid(), t); });
  }
  return 0;
}

int run_eval(const EvalArgs& a) {
  const Assignment pred = read_mask(a.pred);
  const Assignment truth = read_mask(a.gt);
  if (pred.size() != truth.size())
    throw InputError("prediction and truth differ in length");
  const Scores s = score(pred, truth);
  nlohmann::ordered_json j;
  j["precision"] = s.precision;
  j["recall"] = s.recall;
  j["f1"] = s.f1;
  j["true_pos"] = s.true_pos;
  j["false_pos"] = s.false_pos;
  j["false_neg"] = s.false_neg;
  if (!a.instance.empty()) {
    const Instance inst = read_instance(a.instance);
    j["objective"] = objective(pred, inst.weights);
    j["connected"] = is_connected(inst.graph, pred);
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_bench_cmd(const BenchArgs& a) {
  std::vector<BenchInstance> instances;
  for (const auto& path : a.instances) instances.push_back({path, read_instance(path)});
  if (a.suite > 0) {
    RandomMapOptions base;
    base.extents.assign(a.extents.begin(), a.extents.end());
    base.smoothing_radius = a.radius;
    base.seed = a.seed;
    base.background_bias = a.bias;
    for (auto& bi : generated_suite(base, a.suite)) instances.push_back(std::move(bi));
  }
  if (instances.empty()) throw InputError("bench needs instance files or --suite N");

  BenchOptions opt;
  opt.solvers.clear();
  for (const auto& s : a.solvers) opt.solvers.push_back(parse_solver(s));
  opt.strategies.clear();
  for (const auto& s : a.strategies) opt.strategies.push_back(parse_strategy(s, 1).kind);
  opt.k = a.k;
  if (a.leaf_cuts == "on")
    opt.leaf_cut_settings = {true};
  else if (a.leaf_cuts == "off")
    opt.leaf_cut_settings = {false};
  opt.rooted = !a.unrooted;
  opt.rel_gap = a.gap;
  if (a.time_limit) opt.time_limit = std::chrono::duration<double>(*a.time_limit);
  opt.jobs = a.jobs;
  const auto rows = run_bench(instances, opt);
  emit(a.out, [&](std::ostream& os) { write_bench_csv(os, rows, !a.no_timing); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum cost connected subgraph solvers"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve one instance and print its stats JSON");
  s->add_option("instance", solve.instance, "Grid probability or sparse graph file")
      ->required()
      ->check(CLI::ExistingFile);
  s->add_option("--solver", solve.solver)
      ->check(CLI::IsMember({"exact", "geodesic", "maxcomp"}))
      ->capture_default_str();
  s->add_option("--strategy", solve.strategy)
      ->check(CLI::IsMember(kStrategyNames))
      ->capture_default_str();
  s->add_option("--k", solve.k, "Layer budget of the k-strategies")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  s->add_option("--gap", solve.gap, "Relative optimality gap")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  s->add_option("--time-limit", solve.time_limit, "Seconds")->check(CLI::PositiveNumber);
  s->add_option("--root", solve.root, "'auto' or a node index")->capture_default_str();
  s->add_flag("--no-leaf-cuts", solve.no_leaf_cuts);
  s->add_flag("--component-leaf-cuts", solve.component_cuts,
              "Also add cuts for whole positive-weight components");
  s->add_flag("--unrooted", solve.unrooted);
  s->add_option("--gt", solve.gt, "Ground-truth mask")->check(CLI::ExistingFile);
  s->add_option("--out", solve.out, "Solution mask path");
  s->add_option("--stats", solve.stats, "Write the stats JSON here instead of stdout");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write a synthetic probability map");
  g->add_option("--extents", gen.extents)->expected(1, 3)->capture_default_str();
  g->add_option("--radius", gen.radius, "Box-filter passes")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  g->add_option("--seed", gen.seed)->capture_default_str();
  g->add_option("--bias", gen.bias, "Shift towards background")->capture_default_str();
  g->add_option("--truth-out", gen.truth_out, "Also write the p > 0.5 mask");
  g->add_option("--out", gen.out);

  EvalArgs ev;
  auto* e = app.add_subcommand("eval", "Score a predicted mask against a truth mask");
  e->add_option("pred", ev.pred)->required()->check(CLI::ExistingFile);
  e->add_option("--gt", ev.gt)->required()->check(CLI::ExistingFile);
  e->add_option("--instance", ev.instance, "Also report objective and connectivity")
      ->check(CLI::ExistingFile);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Run the solver x strategy matrix, emit CSV");
  b->add_option("instances", bench.instances)->check(CLI::ExistingFile);
  b->add_option("--suite", bench.suite, "Number of generated instances");
  b->add_option("--extents", bench.extents)->expected(1, 3)->capture_default_str();
  b->add_option("--radius", bench.radius)->capture_default_str();
  b->add_option("--seed", bench.seed, "First seed of the suite")->capture_default_str();
  b->add_option("--bias", bench.bias)->capture_default_str();
  b->add_option("--solvers", bench.solvers)
      ->check(CLI::IsMember({"exact", "geodesic", "maxcomp"}));
  b->add_option("--strategies", bench.strategies)->check(CLI::IsMember(kStrategyNames));
  b->add_option("--leaf-cuts", bench.leaf_cuts)
      ->check(CLI::IsMember({"both", "on", "off"}))
      ->capture_default_str();
  b->add_option("--k", bench.k)->check(CLI::PositiveNumber)->capture_default_str();
  b->add_option("--gap", bench.gap)->check(CLI::NonNegativeNumber)->capture_default_str();
  b->add_option("--time-limit", bench.time_limit)->check(CLI::PositiveNumber);
  b->add_flag("--unrooted", bench.unrooted);
  b->add_option("--jobs", bench.jobs)->check(CLI::PositiveNumber)->capture_default_str();
  b->add_flag("--no-timing", bench.no_timing, "Leave wall_time_ms empty");
  b->add_option("--out", bench.out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (s->parsed()) return run_solve(solve);
    if (g->parsed()) return run_gen(gen);
    if (e->parsed()) return run_eval(ev);
    if (b->parsed()) return run_bench_cmd(bench);
  } catch (const InputError& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 2;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "internal error: %s\n", err.what());
    return 3;
  }
  return 1;
}
