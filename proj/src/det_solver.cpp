#include "iris/det_solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "iris/flow.hpp"
#include "selection_search.hpp"

namespace iris {

std::string to_string(Structure s) {
  switch (s) {
    case Structure::Unconstrained: return "Unconstrained";
    case Structure::CliqueComponents: return "CliqueComponents";
    case Structure::General: return "General";
  }
  return "?";
}

StructureClass classify(const Instance& instance) {
  StructureClass out;
  const int n = instance.num_items();
  bool any_edge = false;
  for (int f = 0; f < n && !any_edge; ++f) any_edge = !instance.partners(f).empty();
  if (!any_edge) {
    out.kind = Structure::Unconstrained;
    return out;
  }

  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> classes;
  for (int root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    std::vector<int> members{root};
    comp[root] = id;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int g : instance.partners(members[k]))
        if (comp[g] < 0) {
          comp[g] = id;
          members.push_back(g);
        }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }

  bool cliques = true;
  for (const auto& cls : classes) {
    const std::size_t size = cls.size();
    for (int f : cls)
      if (instance.partners(f).size() != size - 1) cliques = false;
  }
  out.kind = cliques ? Structure::CliqueComponents : Structure::General;
  if (cliques) out.classes = std::move(classes);
  return out;
}

RisSolution solve_greedy(const Instance& instance, const Scenario& scenario) {
  RisSolution sol;
  sol.selection = Selection(instance.num_items());
  for (int i = 0; i < instance.num_sets(); ++i) {
    std::vector<int> idx(instance.set_size(i));
    std::iota(idx.begin(), idx.end(), instance.offset(i));
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return scenario.cost[a] < scenario.cost[b];
    });
    if (instance.quota(i) > static_cast<int>(idx.size())) return {};
    for (int k = 0; k < instance.quota(i); ++k) {
      sol.selection.set(idx[k], true);
      sol.value += scenario.cost[idx[k]];
    }
  }
  sol.status = RisStatus::Optimal;
  return sol;
}

RisSolution solve_bnb(const Instance& instance, const Scenario& scenario,
                      std::optional<Cost> upper_bound_hint) {
  const std::vector<LinearForm> forms{{scenario.cost, 0}};
  detail::SearchOptions options;
  if (upper_bound_hint) options.accept_below = *upper_bound_hint + 1;
  auto result = detail::minimize_max_linear(instance, forms, options);
  if (!result.best && upper_bound_hint) {
    if (detail::minimize_max_linear(instance, forms).best)
      throw std::logic_error("solve_bnb: upper bound hint is below the optimum");
  }
  RisSolution sol;
  if (result.best) {
    sol.selection = std::move(*result.best);
    sol.value = result.value;
    sol.status = RisStatus::Optimal;
  }
  return sol;
}

RisSolution solve_ris(const Instance& instance, const Scenario& scenario) {
  return DeterministicSolver(instance).solve(scenario);
}

DeterministicSolver::DeterministicSolver(const Instance& instance)
    : instance_(&instance), structure_(classify(instance)) {}

RisSolution DeterministicSolver::solve(const Scenario& scenario) const {
  switch (structure_.kind) {
    case Structure::Unconstrained: return solve_greedy(*instance_, scenario);
    case Structure::CliqueComponents:
      return solve_via_flow(*instance_, scenario, structure_.classes);
    case Structure::General: break;
  }
  return solve_bnb(*instance_, scenario);
}

RisSolverFn DeterministicSolver::as_function() const {
  return [this](const Instance&, const Scenario& scenario) { return solve(scenario); };
}

RegretReport evaluate_regret(const Instance& instance, const Selection& x) {
  const DeterministicSolver solver(instance);
  return evaluate_regret(instance, x, solver.as_function());
}

}  // namespace iris
