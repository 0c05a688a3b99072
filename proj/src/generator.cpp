#include "iris/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace iris {

std::string to_string(GenMode mode) {
  return mode == GenMode::Normal ? "normal" : "transitive";
}

GenMode parse_mode(const std::string& text) {
  if (text == "normal") return GenMode::Normal;
  if (text == "transitive") return GenMode::Transitive;
  throw std::invalid_argument("unknown generator mode '" + text + "'");
}

std::uint64_t cross_set_pairs(int m, int r) {
  const std::uint64_t n = static_cast<std::uint64_t>(m) * r;
  return n * (n - (n > 0)) / 2 - static_cast<std::uint64_t>(m) * r * (r - (r > 0)) / 2;
}

Instance generate_instance(const GenParams& params) {
  if (params.m <= 0 || params.r <= 0) throw std::invalid_argument("generator: m and r must be positive");
  if (params.p <= 0 || params.p > params.r) throw std::invalid_argument("generator: need 0 < p <= r");
  if (params.k_pairs < 0) throw std::invalid_argument("generator: negative pair count");
  if (params.cost_min < 0 || params.cost_min > params.cost_max)
    throw std::invalid_argument("generator: bad cost range");
  if (static_cast<std::uint64_t>(params.k_pairs) > cross_set_pairs(params.m, params.r))
    throw std::invalid_argument("generator: more pairs requested than cross-set pairs exist");

  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<Cost> cost(params.cost_min, params.cost_max);
  std::vector<ItemSet> sets(params.m);
  for (auto& set : sets) {
    set.quota = params.p;
    for (int j = 0; j < params.r; ++j) {
      const Cost a = cost(rng);
      const Cost b = cost(rng);
      set.items.push_back({std::min(a, b), std::max(a, b)});
    }
  }

  const int n = params.m * params.r;
  std::vector<std::pair<int, int>> all;
  for (int a = 0; a < n; ++a)
    for (int b = (a / params.r + 1) * params.r; b < n; ++b) all.push_back({a, b});
  for (int k = 0; k < params.k_pairs; ++k) {
    const auto pick = std::uniform_int_distribution<std::size_t>(k, all.size() - 1)(rng);
    std::swap(all[k], all[pick]);
  }
  all.resize(params.k_pairs);

  if (params.mode == GenMode::Transitive) {
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& [a, b] : all) parent[find(a)] = find(b);
    std::vector<std::vector<int>> comps(n);
    for (int v = 0; v < n; ++v) comps[find(v)].push_back(v);
    all.clear();
    for (const auto& comp : comps)
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = i + 1; j < comp.size(); ++j) all.push_back({comp[i], comp[j]});
  }

  std::vector<ForbiddenPair> pairs;
  pairs.reserve(all.size());
  for (const auto& [a, b] : all)
    pairs.push_back({{a / params.r, a % params.r}, {b / params.r, b % params.r}});
  return Instance(std::move(sets), std::move(pairs));
}

}  // namespace iris
