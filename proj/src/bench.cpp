#include "mccs/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "mccs/geodesic.hpp"

namespace mccs {

std::string_view solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::Exact: return "exact";
    case SolverKind::Geodesic: return "geodesic";
    case SolverKind::Maxcomp: return "maxcomp";
  }
  return "?";
}

SolverKind parse_solver(std::string_view name) {
  if (name == "exact") return SolverKind::Exact;
  if (name == "geodesic") return SolverKind::Geodesic;
  if (name == "maxcomp") return SolverKind::Maxcomp;
  throw InputError("unknown solver '" + std::string(name) + "'");
}

namespace {

std::string run_status(SolverKind kind, const SolveResult& r) {
  if (kind == SolverKind::Exact) return std::string(status_name(r.status));
  return kind == SolverKind::Geodesic ? "heuristic" : "baseline";
}

std::string fixed3(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

RunOutcome run_solver(const Instance& instance, const RunSpec& spec) {
  const Graph& g = instance.graph;
  const NodeWeights& w = instance.weights;
  RunOutcome out;
  out.root = instance.root;
  if (spec.solver == SolverKind::Exact && !spec.rooted) out.root.reset();
  const Assignment mc = maxcomp(g, w);
  if (out.root) out.root_in_maxcomp = mc[*out.root] != 0;

  switch (spec.solver) {
    case SolverKind::Exact: {
      SolverConfig config;
      config.strategy = spec.strategy;
      if (spec.rooted) config.root = instance.root;
      config.rel_gap = spec.rel_gap;
      config.time_limit = spec.time_limit;
      config.use_singleton_leaf_cuts = spec.leaf_cuts;
      config.use_component_leaf_cuts = spec.leaf_cuts && spec.component_leaf_cuts;
      out.result = solve_exact(g, w, config);
      break;
    }
    case SolverKind::Geodesic: {
      if (!instance.root) throw InputError("geodesic solver needs a root");
      const auto start = std::chrono::steady_clock::now();
      out.result = solve_geodesic(build_geodesic_tree(g, w, *instance.root), w);
      out.result.stats.wall_time = std::chrono::steady_clock::now() - start;
      break;
    }
    case SolverKind::Maxcomp: {
      const auto start = std::chrono::steady_clock::now();
      out.result.assignment = mc;
      out.result.objective = objective(mc, w);
      out.result.lower_bound = out.result.objective;
      out.result.status = SolveStatus::Optimal;
      out.result.stats.wall_time = std::chrono::steady_clock::now() - start;
      break;
    }
  }
  if (instance.ground_truth)
    out.scores = score(out.result.assignment, *instance.ground_truth);
  return out;
}

std::string stats_json(const RunSpec& spec, const RunOutcome& outcome) {
  using nlohmann::ordered_json;
  const SolveResult& r = outcome.result;
  ordered_json j;
  j["solver"] = solver_name(spec.solver);
  if (spec.solver == SolverKind::Exact) {
    j["strategy"] = strategy_name(spec.strategy.kind);
    j["k"] = spec.strategy.parametric() ? ordered_json(spec.strategy.k)
                                        : ordered_json(nullptr);
  } else {
    j["strategy"] = nullptr;
    j["k"] = nullptr;
  }
  j["objective"] = r.objective;
  j["status"] = run_status(spec.solver, r);
  j["wall_time_ms"] = r.stats.wall_time.count() * 1e3;
  j["search_nodes_expanded"] = r.stats.search_nodes_expanded;
  j["constraints_generated"] = r.stats.constraints_generated;
  j["incumbent_updates"] = r.stats.incumbent_updates;
  j["root"] = outcome.root ? ordered_json(*outcome.root) : ordered_json(nullptr);
  j["root_in_maxcomp"] = outcome.root_in_maxcomp;
  if (outcome.scores) {
    j["f1"] = outcome.scores->f1;
    j["precision"] = outcome.scores->precision;
    j["recall"] = outcome.scores->recall;
  }
  return j.dump(2);
}

std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& instances,
                                const BenchOptions& options) {
  struct Task {
    std::size_t instance;
    RunSpec spec;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (SolverKind solver : options.solvers) {
      RunSpec spec;
      spec.solver = solver;
      spec.rooted = options.rooted;
      spec.rel_gap = options.rel_gap;
      spec.time_limit = options.time_limit;
      if (solver != SolverKind::Exact) {
        tasks.push_back({i, spec});
        continue;
      }
      for (Strategy::Kind kind : options.strategies) {
        spec.strategy = {kind, 1};
        if (spec.strategy.parametric()) spec.strategy.k = options.k;
        for (bool cuts : options.leaf_cut_settings) {
          spec.leaf_cuts = cuts;
          tasks.push_back({i, spec});
        }
      }
    }
  }

  std::vector<BenchRow> rows(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      try {
        const Task& task = tasks[t];
        const RunOutcome o = run_solver(instances[task.instance].instance, task.spec);
        BenchRow& row = rows[t];
        row.instance = instances[task.instance].name;
        row.solver = task.spec.solver;
        if (task.spec.solver == SolverKind::Exact) {
          row.strategy = task.spec.strategy;
          row.leaf_cuts = task.spec.leaf_cuts;
        }
        row.objective = o.result.objective;
        row.status = run_status(task.spec.solver, o.result);
        row.wall_time_ms = o.result.stats.wall_time.count() * 1e3;
        row.search_nodes = o.result.stats.search_nodes_expanded;
        row.constraints = o.result.stats.constraints_generated;
        row.scores = o.scores;
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::clamp<unsigned>(
      options.jobs, 1, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  auto key = [](const BenchRow& r) {
    return std::make_tuple(
        std::cref(r.instance), static_cast<int>(r.solver),
        r.strategy ? static_cast<int>(r.strategy->kind) : -1,
        r.strategy ? r.strategy->k : 0, r.leaf_cuts ? int(*r.leaf_cuts) : -1);
  };
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const BenchRow& a, const BenchRow& b) { return key(a) < key(b); });
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows,
                     bool timing) {
  out << kBenchHeader << '\n';
  for (const BenchRow& r : rows) {
    out << r.instance << ',' << solver_name(r.solver) << ',';
    if (r.strategy) {
      out << strategy_name(r.strategy->kind);
      out << ',';
      if (r.strategy->parametric()) out << r.strategy->k;
    } else {
      out << ',';
    }
    out << ',';
    if (r.leaf_cuts) out << (*r.leaf_cuts ? 1 : 0);
    out << ',' << format_double(r.objective) << ',' << r.status << ',';
    if (timing) out << fixed3(r.wall_time_ms);
    out << ',' << r.search_nodes << ',' << r.constraints << ',';
    if (r.scores)
      out << format_double(r.scores->f1) << ',' << format_double(r.scores->precision)
          << ',' << format_double(r.scores->recall);
    else
      out << ",,";
    out << '\n';
  }
}

std::vector<BenchInstance> generated_suite(const RandomMapOptions& base,
                                           std::size_t count) {
  std::string shape;
  for (std::size_t a = 0; a < base.extents.size(); ++a)
    shape += (a ? "x" : "") + std::to_string(base.extents[a]);
  std::vector<BenchInstance> out;
  for (std::size_t s = 0; s < count; ++s) {
    RandomMapOptions o = base;
    o.seed = base.seed + s;
    char name[96];
    std::snprintf(name, sizeof name, "gen-%s-r%d-s%llu", shape.c_str(),
                  o.smoothing_radius, static_cast<unsigned long long>(o.seed));
    out.push_back({name, gen_random(o)});
  }
  return out;
}

}  // namespace mccs
