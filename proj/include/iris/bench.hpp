#pragma once

// Benchmark harness: generate instances row by row, solve them, and
// aggregate the per-row statistics reported in the results tables.

#include <optional>
#include <string>
#include <vector>

#include "iris/generator.hpp"
#include "iris/regret.hpp"

namespace iris {

struct InstanceRun {
  std::uint64_t seed = 0;
  std::size_t effective_pairs = 0;
  RobustStatus status = RobustStatus::Infeasible;
  Cost value = 0;
  Cost lower_bound = 0;
  Cost upper_bound = 0;
  double gap = 0;
  int iterations = 0;
  double seconds = 0;
  std::string error;  // non-empty when the run threw
};

struct BenchRow {
  GenParams params;
  int n = 0;
  int instances = 0;
  double k_effective_mean = 0;
  double time_mean = 0;
  double time_std = 0;
  std::optional<double> iter_mean;  // over optimal runs
  std::optional<double> iter_std;
  int opt_count = 0;
  double value_mean = 0;
  std::optional<double> gap_mean;  // over non-optimal runs; absent when all optimal
  std::vector<InstanceRun> runs;
};

struct BenchSuite {
  std::vector<GenParams> rows;
  int instances_per_row = 10;
  SolverConfig config;
};

// Seed of instance `index` within a row; independent of execution order.
std::uint64_t instance_seed(std::uint64_t row_seed, int index);

BenchRow aggregate(const GenParams& params, std::vector<InstanceRun> runs);

std::vector<BenchRow> run_benchmark(const std::vector<GenParams>& rows, int instances_per_row,
                                    const SolverConfig& config);

// Columns: n,m,r_i,p_i,K,time_mean,time_std,iter_mean,iter_std,opt,value_mean,gap.
// Without timing the two time columns hold "-".
std::string bench_csv(const std::vector<BenchRow>& rows, bool include_timing = true);
std::string bench_table(const std::vector<BenchRow>& rows, bool include_timing = true);

// Either a JSON array of row objects or {"rows": [...], "instances_per_row": N,
// "config": {...}}. Row fields: m, r, p, k, mode, seed, cost_min, cost_max.
BenchSuite parse_suite(const std::string& text);

}  // namespace iris
