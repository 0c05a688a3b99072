#include "iris/regret.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "iris/det_solver.hpp"
#include "selection_search.hpp"

namespace iris {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<LinearForm> forms_of(const Instance& instance, const CutSet& cuts) {
  std::vector<LinearForm> forms;
  forms.reserve(cuts.size());
  for (const auto& cut : cuts.cuts()) forms.push_back(cut_objective_coefficients(instance, cut.y));
  return forms;
}

Cost upper_cost(const Instance& instance, const Selection& x) {
  return cost_of(upper_scenario(instance), x);
}

double relative_gap(Cost ub, Cost lb) {
  return ub == 0 ? 0.0 : static_cast<double>(ub - lb) / static_cast<double>(ub);
}

std::uint64_t derive_seed(std::uint64_t seed) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct Start {
  CutSet cuts;
  Selection best_x;
  Cost best_regret = 0;
};

RobustResult run(const Instance& instance, const SolverConfig& config, Start start) {
  const DeterministicSolver solver(instance);
  const auto regret_fn = solver.as_function();

  RobustResult result;
  result.status = RobustStatus::IterationLimit;
  result.initial_upper_bound = start.best_regret;
  result.initial_cuts = start.cuts.size();

  CutSet cuts = std::move(start.cuts);
  Selection best_x = std::move(start.best_x);
  Cost ub = start.best_regret;
  Cost lb = 0;  // regret is never negative
  std::optional<Selection> previous;

  auto finish = [&](RobustStatus status, const Selection& x, Cost regret) {
    result.status = status;
    result.x_star = x;
    result.regret = regret;
    result.lower_bound = lb;
    result.upper_bound = ub;
    result.gap = relative_gap(ub, lb);
    return result;
  };

  for (int iter = 1; iter <= config.iteration_limit; ++iter) {
    IterationRecord rec;
    rec.iteration = iter;

    // Warm start from whichever known selection scores best on the master.
    std::optional<Selection> incumbent = best_x;
    if (previous && master_objective(instance, cuts, *previous) <
                        master_objective(instance, cuts, best_x))
      incumbent = previous;

    const auto master_start = Clock::now();
    MasterSolution master;
    for (;;) {
      rec.cuts = cuts.size();
      master = solve_master(instance, cuts, config, incumbent, lb);
      if (master.status != MasterStatus::TimeLimit) break;
      if (cuts.size() <= 1) {
        rec.master_seconds = seconds_since(master_start);
        result.iterations = iter;
        result.trace.push_back(rec);
        return finish(RobustStatus::TimeLimit, best_x, ub);
      }
      cuts = prune_cuts(cuts, config.cut_prune_count);
      ++rec.prunes;
    }
    rec.master_seconds = seconds_since(master_start);
    if (master.status == MasterStatus::Infeasible) {
      result.iterations = iter;
      return finish(RobustStatus::Infeasible, {}, 0);
    }

    lb = std::max(lb, master.objective);
    const auto sub_start = Clock::now();
    const auto report = evaluate_regret(instance, master.x_hat, regret_fn);
    rec.subproblem_seconds = seconds_since(sub_start);

    if (report.regret < ub) {
      ub = report.regret;
      best_x = master.x_hat;
    }
    cuts.set_slacks(instance, master.x_hat, master.z_hat);

    rec.master_objective = master.objective;
    rec.z_hat = master.z_hat;
    rec.regret = report.regret;
    rec.witness_cost = cost_of(report.scenario, report.witness);
    rec.lower_bound = lb;
    rec.upper_bound = ub;
    result.iterations = iter;

    const bool certified =
        static_cast<double>(report.regret - master.objective) <= config.epsilon;
    if (!certified) {
      if (rec.witness_cost >= master.z_hat)
        throw std::logic_error("cut generation: adversary selection does not cut off x_hat");
      rec.cut_added = cuts.add(report.witness);
      if (!rec.cut_added)
        throw std::logic_error("cut generation: regenerated an existing cut");
    }
    result.trace.push_back(rec);
    if (config.on_iteration) config.on_iteration(rec);

    if (certified) {
      if (report.regret <= ub) return finish(RobustStatus::Optimal, master.x_hat, report.regret);
      return finish(RobustStatus::Optimal, best_x, ub);
    }
    previous = master.x_hat;
  }
  return finish(RobustStatus::IterationLimit, best_x, ub);
}

}  // namespace

std::string to_string(RobustStatus s) {
  switch (s) {
    case RobustStatus::Optimal: return "Optimal";
    case RobustStatus::IterationLimit: return "IterationLimit";
    case RobustStatus::TimeLimit: return "TimeLimit";
    case RobustStatus::Infeasible: return "Infeasible";
  }
  return "?";
}

LinearForm cut_objective_coefficients(const Instance& instance, const Selection& y) {
  LinearForm form;
  form.coeff.resize(instance.num_items());
  for (int f = 0; f < instance.num_items(); ++f) {
    const auto& c = instance.interval(f);
    if (y.contains(f)) {
      form.coeff[f] = c.lo;
      form.constant += c.lo;
    } else {
      form.coeff[f] = c.hi;
    }
  }
  return form;
}

Cost master_objective(const Instance& instance, const CutSet& cuts, const Selection& x) {
  Cost best = std::numeric_limits<Cost>::min();
  for (const auto& cut : cuts.cuts())
    best = std::max(best, cut_objective_coefficients(instance, cut.y).eval(x));
  return best;
}

MasterSolution solve_master(const Instance& instance, const CutSet& cuts,
                            const SolverConfig& config, const std::optional<Selection>& incumbent,
                            std::optional<Cost> stop_at) {
  if (cuts.empty()) throw std::invalid_argument("solve_master: empty cut set");
  const auto forms = forms_of(instance, cuts);

  detail::SearchOptions options;
  options.incumbent = incumbent;
  if (stop_at) options.stop_at = *stop_at;
  options.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                        config.master_time_limit);
  auto search = detail::minimize_max_linear(instance, forms, options);

  MasterSolution sol;
  sol.nodes = search.nodes;
  if (search.status == detail::SearchStatus::TimeLimit) {
    sol.status = MasterStatus::TimeLimit;
    return sol;
  }
  if (!search.best) return sol;
  sol.status = MasterStatus::Optimal;
  sol.proven = search.status == detail::SearchStatus::Complete;
  sol.x_hat = std::move(*search.best);
  sol.objective = search.value;
  sol.z_hat = upper_cost(instance, sol.x_hat) - sol.objective;
  return sol;
}

RobustResult minmax_regret(const Instance& instance, const SolverConfig& config) {
  require_valid(instance);
  Start start;
  try {
    if (config.use_heuristics) {
      std::mt19937_64 rng(config.rng_seed);
      EvoParams evo = config.evo;
      evo.rng_seed = derive_seed(config.rng_seed);
      auto pool = initialize(instance, config.initial_scenarios, rng, evo);
      start.cuts = std::move(pool.cuts);
      start.best_x = pool.population.members.front().x;
      start.best_regret = pool.population.members.front().regret;
    } else {
      const DeterministicSolver solver(instance);
      auto mid = solver.solve(midpoint_scenario(instance));
      if (!mid.optimal()) throw InfeasibleInstance();
      start.best_regret = evaluate_regret(instance, mid.selection, solver.as_function()).regret;
      start.best_x = mid.selection;
      start.cuts.add(std::move(mid.selection));
    }
  } catch (const InfeasibleInstance&) {
    return RobustResult{};
  }
  return run(instance, config, std::move(start));
}

RobustResult minmax_regret(const Instance& instance, const SolverConfig& config,
                           CutSet initial_cuts) {
  require_valid(instance);
  if (initial_cuts.empty()) throw std::invalid_argument("minmax_regret: empty initial cut set");
  const DeterministicSolver solver(instance);
  Start start;
  bool have = false;
  for (const auto& cut : initial_cuts.cuts()) {
    if (!is_feasible(instance, cut.y))
      throw std::invalid_argument("minmax_regret: initial cut is not a feasible selection");
    const Cost r = evaluate_regret(instance, cut.y, solver.as_function()).regret;
    if (!have || r < start.best_regret) {
      start.best_regret = r;
      start.best_x = cut.y;
      have = true;
    }
  }
  start.cuts = std::move(initial_cuts);
  return run(instance, config, std::move(start));
}

std::string trace_json_line(const IterationRecord& r) {
  nlohmann::ordered_json j;
  j["iteration"] = r.iteration;
  j["lb"] = r.lower_bound;
  j["ub"] = r.upper_bound;
  j["cuts"] = r.cuts;
  j["master_objective"] = r.master_objective;
  j["regret"] = r.regret;
  j["master_time"] = r.master_seconds;
  j["subproblem_time"] = r.subproblem_seconds;
  return j.dump();
}

}  // namespace iris
