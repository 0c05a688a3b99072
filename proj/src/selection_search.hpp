#pragma once

// Depth-first branch and bound minimizing the pointwise maximum of a list of
// linear forms over the feasible selections of an instance.
//
// The deterministic solver uses a single form (the scenario costs); the
// regret master problem uses one form per cut.

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "iris/model.hpp"

namespace iris::detail {

struct SearchOptions {
  // Only selections whose value is strictly below this are accepted.
  Cost accept_below = std::numeric_limits<Cost>::max();
  // Starting solution; its value tightens accept_below.
  std::optional<Selection> incumbent;
  // Abort with SearchStatus::Stopped as soon as the incumbent value is <= this.
  Cost stop_at = std::numeric_limits<Cost>::min();
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

enum class SearchStatus { Complete, Stopped, TimeLimit };

struct SearchResult {
  SearchStatus status = SearchStatus::Complete;
  std::optional<Selection> best;
  Cost value = 0;
  std::uint64_t nodes = 0;
};

SearchResult minimize_max_linear(const Instance& instance, const std::vector<LinearForm>& forms,
                                 const SearchOptions& options = {});

// Value of the relaxation bound at the root (conflicts between undecided
// items ignored, quotas kept); exposed for admissibility tests.
// Items listed in `fixed_in` / `fixed_out` are decided before bounding, with
// the usual conflict propagation. Returns nullopt when propagation proves
// the node infeasible.
std::optional<Cost> node_bound(const Instance& instance, const std::vector<LinearForm>& forms,
                               const std::vector<int>& fixed_in,
                               const std::vector<int>& fixed_out);

}  // namespace iris::detail
