#pragma once

// Exact solvers for the deterministic selection problem under one scenario.

#include <optional>
#include <string>
#include <vector>

#include "iris/model.hpp"

namespace iris {

enum class Structure { Unconstrained, CliqueComponents, General };

std::string to_string(Structure s);

// Conflict-graph structure. For CliqueComponents, `classes` partitions all
// items (flat indices) into the connected components of the conflict graph,
// each of which is a clique; at most one item per class may be selected.
// Classes are ordered by their smallest item, items ascending within a class.
struct StructureClass {
  Structure kind = Structure::Unconstrained;
  std::vector<std::vector<int>> classes;
};

StructureClass classify(const Instance& instance);

// Per-set sort; requires an instance without forbidden pairs. Ties go to the
// lower item index.
RisSolution solve_greedy(const Instance& instance, const Scenario& scenario);

// Branch and bound. `upper_bound_hint` must be >= the optimum when given; it
// only prunes. Throws std::logic_error when the hint is below the optimum.
RisSolution solve_bnb(const Instance& instance, const Scenario& scenario,
                      std::optional<Cost> upper_bound_hint = std::nullopt);

// Dispatches on classify(): greedy, min-cost flow, or branch and bound.
RisSolution solve_ris(const Instance& instance, const Scenario& scenario);

// Solver handle that classifies once and reuses the result for every
// scenario of the same instance.
class DeterministicSolver {
 public:
  explicit DeterministicSolver(const Instance& instance);

  RisSolution solve(const Scenario& scenario) const;
  const StructureClass& structure() const { return structure_; }
  // Adapter usable wherever a RisSolverFn is expected (same instance only).
  RisSolverFn as_function() const;

 private:
  const Instance* instance_;
  StructureClass structure_;
};

RegretReport evaluate_regret(const Instance& instance, const Selection& x);

}  // namespace iris
