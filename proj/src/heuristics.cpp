#include "iris/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "iris/det_solver.hpp"

namespace iris {
namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Selection mutate(const Instance& instance, const Selection& x, std::mt19937_64& rng) {
  std::vector<int> eligible;
  for (int i = 0; i < instance.num_sets(); ++i)
    if (instance.quota(i) > 0 && instance.quota(i) < instance.set_size(i)) eligible.push_back(i);
  if (eligible.empty()) return x;

  for (int attempt = 0; attempt < kRepairAttempts; ++attempt) {
    Selection y = x;
    std::shuffle(eligible.begin(), eligible.end(), rng);
    const int n_sets = uniform(rng, 1, static_cast<int>(eligible.size()));
    for (int k = 0; k < n_sets; ++k) {
      const int set = eligible[k];
      std::vector<int> in, out;
      for (int f = instance.offset(set); f < instance.offset(set + 1); ++f)
        (y.contains(f) ? in : out).push_back(f);
      const int swaps = uniform(rng, 1, static_cast<int>(std::min(in.size(), out.size())));
      std::shuffle(in.begin(), in.end(), rng);
      std::shuffle(out.begin(), out.end(), rng);
      for (int s = 0; s < swaps; ++s) {
        y.set(in[s], false);
        y.set(out[s], true);
      }
    }
    if (is_feasible(instance, y)) return y;
  }
  return x;
}

Selection crossover(const Instance& instance, const Selection& x1, const Selection& x2,
                    std::mt19937_64& rng) {
  const int m = instance.num_sets();
  if (m == 0 || x1 == x2) return x1;
  for (int attempt = 0; attempt < kRepairAttempts; ++attempt) {
    std::vector<bool> take(m);
    bool any = false;
    for (int i = 0; i < m; ++i) {
      take[i] = (rng() & 1u) != 0;
      any = any || take[i];
    }
    if (!any) take[uniform(rng, 0, m - 1)] = true;
    Selection child = x1;
    for (int i = 0; i < m; ++i) {
      if (!take[i]) continue;
      for (int f = instance.offset(i); f < instance.offset(i + 1); ++f)
        child.set(f, x2.contains(f));
    }
    if (is_feasible(instance, child)) return child;
  }
  return x1;
}

Population evolve(const Instance& instance, const EvoParams& params) {
  const DeterministicSolver solver(instance);
  const auto seed = solver.solve(midpoint_scenario(instance));
  if (!seed.optimal()) throw InfeasibleInstance();

  std::mt19937_64 rng(params.rng_seed);
  std::unordered_map<Selection, Cost, SelectionHash> memo;
  const auto regret_fn = solver.as_function();
  auto score = [&](const Selection& x) {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    const Cost r = evaluate_regret(instance, x, regret_fn).regret;
    memo.emplace(x, r);
    return r;
  };

  Population pop;
  pop.members.push_back({seed.selection, score(seed.selection)});
  pop.best_regret.push_back(pop.members.front().regret);

  for (int it = 0; it < params.iterations; ++it) {
    std::vector<Member> next = pop.members;
    const int size = static_cast<int>(pop.members.size());
    for (int k = 0; k < params.ops_per_iteration; ++k) {
      const auto& a = pop.members[uniform(rng, 0, size - 1)].x;
      const auto& b = pop.members[uniform(rng, 0, size - 1)].x;
      auto child = crossover(instance, a, b, rng);
      const Cost r = score(child);
      next.push_back({std::move(child), r});
    }
    for (int k = 0; k < params.ops_per_iteration; ++k) {
      auto child = mutate(instance, pop.members[uniform(rng, 0, size - 1)].x, rng);
      const Cost r = score(child);
      next.push_back({std::move(child), r});
    }
    std::sort(next.begin(), next.end(), [](const Member& a, const Member& b) {
      if (a.regret != b.regret) return a.regret < b.regret;
      return a.x < b.x;
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Member& a, const Member& b) { return a.x == b.x; }),
               next.end());
    if (static_cast<int>(next.size()) > params.population_size)
      next.resize(params.population_size);
    pop.members = std::move(next);
    pop.best_regret.push_back(pop.members.front().regret);
  }
  pop.evaluations = memo.size();
  return pop;
}

InitialPool initialize(const Instance& instance, int n_scenarios, std::mt19937_64& rng,
                       const EvoParams& params) {
  const DeterministicSolver solver(instance);
  InitialPool pool;
  for (int s = 0; s < n_scenarios; ++s) {
    auto sol = solver.solve(sample_extreme_scenario(instance, rng));
    if (!sol.optimal()) throw InfeasibleInstance();
    pool.cuts.add(std::move(sol.selection));
  }
  pool.population = evolve(instance, params);
  for (const auto& member : pool.population.members) pool.cuts.add(member.x);
  return pool;
}

CutSet initialize_cuts(const Instance& instance, int n_scenarios, std::mt19937_64& rng,
                       const EvoParams& params) {
  return initialize(instance, n_scenarios, rng, params).cuts;
}

}  // namespace iris
