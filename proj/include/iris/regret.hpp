#pragma once

// Exact interval min-max regret by cut generation.
//
// The master problem minimizes max_{y in C} l_y(x) over feasible x, where
// l_y(x) = c+.x - c(x).y is linear in x for a fixed cut y. Each iteration
// solves the master, computes the true regret of its solution through the
// deterministic solver, and either certifies optimality or adds the
// adversary's selection as a new cut.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iris/cuts.hpp"
#include "iris/heuristics.hpp"
#include "iris/model.hpp"

namespace iris {

struct IterationRecord {
  int iteration = 0;
  Cost master_objective = 0;  // c+.x_hat - z_hat
  Cost z_hat = 0;
  Cost regret = 0;            // R(x_hat)
  Cost witness_cost = 0;      // c(x_hat).y_hat
  Cost lower_bound = 0;
  Cost upper_bound = 0;
  std::size_t cuts = 0;       // |C| used by this master solve
  int prunes = 0;             // master retries after a time limit
  double master_seconds = 0;
  double subproblem_seconds = 0;
  bool cut_added = false;
};

struct SolverConfig {
  double epsilon = 0.0;
  int iteration_limit = 500;
  std::chrono::duration<double> master_time_limit = std::chrono::seconds(60);
  int cut_prune_count = 3;
  std::uint64_t rng_seed = 0;
  bool use_heuristics = true;
  int initial_scenarios = 100;
  EvoParams evo;  // rng_seed is derived from SolverConfig::rng_seed
  std::function<void(const IterationRecord&)> on_iteration;
};

enum class RobustStatus { Optimal, IterationLimit, TimeLimit, Infeasible };
std::string to_string(RobustStatus s);

struct RobustResult {
  Selection x_star;
  Cost regret = 0;
  Cost lower_bound = 0;
  Cost upper_bound = 0;
  double gap = 0;  // (UB - LB) / UB, 0 when UB == 0
  int iterations = 0;
  RobustStatus status = RobustStatus::Infeasible;
  Cost initial_upper_bound = 0;
  std::size_t initial_cuts = 0;
  std::vector<IterationRecord> trace;
};

// l_y(x) = sum_ij a_ij x_ij - b_y with a_ij = lo if y_ij else hi, b_y = lo.y.
LinearForm cut_objective_coefficients(const Instance& instance, const Selection& y);

enum class MasterStatus { Optimal, Infeasible, TimeLimit };

struct MasterSolution {
  MasterStatus status = MasterStatus::Infeasible;
  Selection x_hat;
  Cost z_hat = 0;
  Cost objective = 0;
  // False when the search stopped early at `stop_at`; the objective is then
  // an upper bound on the master optimum that does not exceed stop_at.
  bool proven = true;
  std::uint64_t nodes = 0;
};

// `stop_at` ends the search as soon as a selection with objective <= stop_at
// is known (any valid lower bound on the master optimum is safe here).
MasterSolution solve_master(const Instance& instance, const CutSet& cuts,
                            const SolverConfig& config,
                            const std::optional<Selection>& incumbent = std::nullopt,
                            std::optional<Cost> stop_at = std::nullopt);

Cost master_objective(const Instance& instance, const CutSet& cuts, const Selection& x);

RobustResult minmax_regret(const Instance& instance, const SolverConfig& config = {});
// Runs the loop from a caller-supplied, nonempty cut set.
RobustResult minmax_regret(const Instance& instance, const SolverConfig& config,
                           CutSet initial_cuts);

std::string trace_json_line(const IterationRecord& record);

}  // namespace iris
