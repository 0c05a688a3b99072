#pragma once

#include <cstdint>
#include <string>

#include "iris/model.hpp"

namespace iris {

enum class GenMode { Normal, Transitive };

std::string to_string(GenMode mode);
GenMode parse_mode(const std::string& text);  // "normal" | "transitive"

struct GenParams {
  int m = 5;
  int r = 10;
  int p = 2;
  int k_pairs = 0;
  GenMode mode = GenMode::Normal;
  Cost cost_min = 1;
  Cost cost_max = 100;
  std::uint64_t seed = 0;
};

// Number of item pairs lying in two different sets (uniform set size r).
std::uint64_t cross_set_pairs(int m, int r);

// Each item gets two independent uniform draws in [cost_min, cost_max],
// ordered as (lo, hi). Normal mode samples k_pairs distinct cross-set pairs
// uniformly without replacement; Transitive mode then completes every
// connected component of the conflict graph to a clique (which may add
// pairs inside one set). Throws std::invalid_argument on bad parameters.
Instance generate_instance(const GenParams& params);

}  // namespace iris
