#pragma once

// Exhaustive reference solvers. Intended for tests and small instances:
// every function rejects instances whose count of quota-respecting
// selections exceeds kEnumerationGuard.

#include <cstdint>
#include <vector>

#include "iris/model.hpp"
#include "iris/regret.hpp"

namespace iris {

inline constexpr std::uint64_t kEnumerationGuard = 10'000'000;

// Product of binomial(r_i, p_i), saturating at UINT64_MAX.
std::uint64_t quota_selection_count(const Instance& instance);

// All feasible selections in lexicographic order. Throws std::length_error
// past the guard.
std::vector<Selection> enumerate_feasible(const Instance& instance);

// Lexicographically smallest optimum, or Infeasible.
RisSolution brute_force_ris(const Instance& instance, const Scenario& scenario);

// Exact min over F of R(x); status Optimal with LB == UB == regret, or
// Infeasible when F is empty.
RobustResult brute_force_minmax_regret(const Instance& instance);

}  // namespace iris
