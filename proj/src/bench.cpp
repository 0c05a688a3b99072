#include "iris/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "iris/io.hpp"

namespace iris {
namespace {

double mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Sample standard deviation; 0 for fewer than two values.
double stddev(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double mu = mean(v);
  double ss = 0;
  for (double x : v) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

std::string fixed2(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

std::string opt2(const std::optional<double>& v) { return v ? fixed2(*v) : "-"; }

std::vector<std::vector<std::string>> cells(const std::vector<BenchRow>& rows, bool timing) {
  std::vector<std::vector<std::string>> out;
  out.push_back({"n", "m", "r_i", "p_i", "K", "time_mean", "time_std", "iter_mean", "iter_std",
                 "opt", "value_mean", "gap"});
  for (const auto& row : rows) {
    out.push_back({std::to_string(row.n), std::to_string(row.params.m), std::to_string(row.params.r),
                   std::to_string(row.params.p), fixed2(row.k_effective_mean),
                   timing ? fixed2(row.time_mean) : "-", timing ? fixed2(row.time_std) : "-",
                   opt2(row.iter_mean), opt2(row.iter_std), std::to_string(row.opt_count),
                   fixed2(row.value_mean), opt2(row.gap_mean)});
  }
  return out;
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t row_seed, int index) {
  std::uint64_t z = row_seed * 0x100000001b3ull + static_cast<std::uint64_t>(index) + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

BenchRow aggregate(const GenParams& params, std::vector<InstanceRun> runs) {
  BenchRow row;
  row.params = params;
  row.n = params.m * params.r;
  row.instances = static_cast<int>(runs.size());
  std::vector<double> k, times, iters, values, gaps;
  for (const auto& run : runs) {
    k.push_back(static_cast<double>(run.effective_pairs));
    times.push_back(run.seconds);
    if (!run.error.empty() || run.status == RobustStatus::Infeasible) continue;
    values.push_back(static_cast<double>(run.value));
    if (run.status == RobustStatus::Optimal) {
      ++row.opt_count;
      iters.push_back(run.iterations);
    } else {
      gaps.push_back(run.gap);
    }
  }
  row.k_effective_mean = mean(k);
  row.time_mean = mean(times);
  row.time_std = stddev(times);
  if (!iters.empty()) {
    row.iter_mean = mean(iters);
    row.iter_std = stddev(iters);
  }
  row.value_mean = mean(values);
  if (row.opt_count < row.instances) row.gap_mean = mean(gaps);
  row.runs = std::move(runs);
  return row;
}

std::vector<BenchRow> run_benchmark(const std::vector<GenParams>& rows, int instances_per_row,
                                    const SolverConfig& config) {
  std::vector<BenchRow> out;
  for (const auto& params : rows) {
    std::vector<InstanceRun> runs;
    for (int i = 0; i < instances_per_row; ++i) {
      InstanceRun run;
      run.seed = instance_seed(params.seed, i);
      const auto start = std::chrono::steady_clock::now();
      try {
        GenParams gp = params;
        gp.seed = run.seed;
        const Instance instance = generate_instance(gp);
        run.effective_pairs = instance.forbidden().size();
        SolverConfig cfg = config;
        cfg.rng_seed = run.seed;
        cfg.on_iteration = nullptr;
        const auto result = minmax_regret(instance, cfg);
        run.status = result.status;
        run.value = result.regret;
        run.lower_bound = result.lower_bound;
        run.upper_bound = result.upper_bound;
        run.gap = result.gap;
        run.iterations = result.iterations;
      } catch (const std::exception& e) {
        run.error = e.what();
      }
      run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      runs.push_back(std::move(run));
    }
    out.push_back(aggregate(params, std::move(runs)));
  }
  return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool include_timing) {
  std::ostringstream os;
  for (const auto& line : cells(rows, include_timing)) {
    for (std::size_t c = 0; c < line.size(); ++c) os << (c ? "," : "") << line[c];
    os << '\n';
  }
  return os.str();
}

std::string bench_table(const std::vector<BenchRow>& rows, bool include_timing) {
  const auto table = cells(rows, include_timing);
  std::vector<std::size_t> width(table.front().size(), 0);
  for (const auto& line : table)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::ostringstream os;
  for (const auto& line : table) {
    for (std::size_t c = 0; c < line.size(); ++c)
      os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << line[c];
    os << '\n';
  }
  return os.str();
}

BenchSuite parse_suite(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed suite JSON: ") + e.what());
  }
  BenchSuite suite;
  const json* rows = &doc;
  try {
    if (doc.is_object()) {
      if (!doc.contains("rows")) throw ParseError("suite object needs \"rows\"");
      rows = &doc.at("rows");
      suite.instances_per_row = doc.value("instances_per_row", 10);
      if (doc.contains("config")) {
        const auto& c = doc.at("config");
        suite.config.iteration_limit = c.value("iteration_limit", suite.config.iteration_limit);
        suite.config.master_time_limit = std::chrono::duration<double>(
            c.value("master_time_limit", suite.config.master_time_limit.count()));
        suite.config.epsilon = c.value("epsilon", suite.config.epsilon);
        suite.config.cut_prune_count = c.value("cut_prune_count", suite.config.cut_prune_count);
        suite.config.use_heuristics = c.value("use_heuristics", suite.config.use_heuristics);
        suite.config.initial_scenarios = c.value("initial_scenarios", suite.config.initial_scenarios);
      }
    }
    if (!rows->is_array()) throw ParseError("suite rows must be an array");
    for (const auto& jr : *rows) {
      GenParams p;
      p.m = jr.at("m").get<int>();
      p.r = jr.at("r").get<int>();
      p.p = jr.at("p").get<int>();
      p.k_pairs = jr.value("k", 0);
      p.mode = parse_mode(jr.value("mode", std::string("normal")));
      p.seed = jr.value("seed", std::uint64_t{0});
      p.cost_min = jr.value("cost_min", p.cost_min);
      p.cost_max = jr.value("cost_max", p.cost_max);
      suite.rows.push_back(p);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad suite: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad suite: ") + e.what());
  }
  if (suite.instances_per_row <= 0) throw ParseError("instances_per_row must be positive");
  return suite;
}

}  // namespace iris
