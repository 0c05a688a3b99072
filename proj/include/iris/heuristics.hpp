#pragma once

// Cut-set initialization: RIS solutions of sampled extreme scenarios plus the
// population of an evolutionary search seeded by the mid-point solution.

#include <cstdint>
#include <random>
#include <vector>

#include "iris/cuts.hpp"
#include "iris/model.hpp"

namespace iris {

struct EvoParams {
  int iterations = 20;
  int population_size = 10;
  int ops_per_iteration = 100;  // crossovers, and separately mutations, per round
  std::uint64_t rng_seed = 0;
};

struct Member {
  Selection x;
  Cost regret = 0;
};

struct Population {
  std::vector<Member> members;  // ascending regret
  std::vector<Cost> best_regret;  // after seeding, then after each round
  std::size_t evaluations = 0;    // distinct regret evaluations
};

// Rejection attempts per mutation or crossover before returning the parent.
inline constexpr int kRepairAttempts = 50;

Selection mutate(const Instance& instance, const Selection& x, std::mt19937_64& rng);
Selection crossover(const Instance& instance, const Selection& x1, const Selection& x2,
                    std::mt19937_64& rng);

// Throws InfeasibleInstance when no feasible selection exists.
Population evolve(const Instance& instance, const EvoParams& params);

struct InitialPool {
  CutSet cuts;
  Population population;
};

InitialPool initialize(const Instance& instance, int n_scenarios, std::mt19937_64& rng,
                       const EvoParams& params);
CutSet initialize_cuts(const Instance& instance, int n_scenarios, std::mt19937_64& rng,
                       const EvoParams& params = {});

}  // namespace iris
