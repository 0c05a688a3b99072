#pragma once

// Shared instances for the test suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "iris/generator.hpp"
#include "iris/model.hpp"
#include "iris/reductions.hpp"
#include "iris/regret.hpp"

namespace iris::test {

// Three sets of three items, pick two from each. The first three pairs form
// a triangle over item 0 of every set; the fourth links item 1 of sets 0, 1.
inline Instance example_one() {
  std::vector<ItemSet> sets(3);
  for (int i = 0; i < 3; ++i) {
    sets[i].quota = 2;
    for (int j = 0; j < 3; ++j) {
      const Cost lo = 1 + ((3 * i + 2 * j) % 7);
      sets[i].items.push_back({lo, lo + 1 + ((i + 5 * j) % 4)});
    }
  }
  return Instance(std::move(sets), {{{0, 0}, {1, 0}}, {{1, 0}, {2, 0}}, {{0, 0}, {2, 0}},
                                    {{0, 1}, {1, 1}}});
}

inline Instance degenerate_copy(const Instance& instance, bool use_hi = false) {
  auto sets = instance.sets();
  for (auto& s : sets)
    for (auto& c : s.items) c = use_hi ? CostInterval{c.hi, c.hi} : CostInterval{c.lo, c.lo};
  return Instance(std::move(sets), instance.forbidden());
}

inline Literal xl(int var, bool positive = true) { return {VarKind::X, var, positive}; }
inline Literal yl(int var, bool positive = true) { return {VarKind::Y, var, positive}; }

// (x1 & x2 & y1) | (x1 & !y1 & y2) | (x2 & !x3 & !y2) | (x3 & !y1 & !y2), 0-based.
inline QuantifiedDnf example_two() {
  QuantifiedDnf phi;
  phi.x_vars = 3;
  phi.y_vars = 2;
  phi.clauses = {{xl(0), xl(1), yl(0)},
                 {xl(0), yl(0, false), yl(1)},
                 {xl(1), xl(2, false), yl(1, false)},
                 {xl(2), yl(0, false), yl(1, false)}};
  return phi;
}

// Random parameters inside the small oracle box: m <= 4, r <= 5, p <= 2, K <= 6.
inline GenParams small_box_params(std::mt19937_64& rng, std::uint64_t seed) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  GenParams p;
  p.m = pick(1, 4);
  p.r = pick(2, 5);
  p.p = pick(1, std::min(2, p.r));
  const auto pairs = static_cast<int>(std::min<std::uint64_t>(6, cross_set_pairs(p.m, p.r)));
  p.k_pairs = pick(0, pairs);
  p.mode = pick(0, 1) ? GenMode::Transitive : GenMode::Normal;
  p.cost_max = pick(0, 2) == 0 ? 10 : 100;
  p.seed = seed;
  return p;
}

inline std::vector<Instance> small_box_suite(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  for (int k = 0; k < count; ++k) out.push_back(generate_instance(small_box_params(rng, seed * 1000 + k)));
  return out;
}

inline Scenario random_scenario(const Instance& instance, std::mt19937_64& rng) {
  Scenario s;
  for (int f = 0; f < instance.num_items(); ++f) {
    const auto& c = instance.interval(f);
    s.cost.push_back(std::uniform_int_distribution<Cost>(c.lo, c.hi)(rng));
  }
  return s;
}

// Empty when the recorded run satisfies the cut-generation invariants:
// nondecreasing LB, every added cut strictly violated by the master solution
// that produced it, and the stopping certificate on an Optimal exit.
inline std::string trace_violation(const RobustResult& r, double eps = 0.0) {
  Cost lb = 0;
  for (const auto& rec : r.trace) {
    if (rec.lower_bound < lb) return "lower bound decreased at iteration " + std::to_string(rec.iteration);
    lb = rec.lower_bound;
    if (rec.lower_bound > rec.upper_bound) return "LB above UB";
    if (rec.cut_added && !(rec.witness_cost < rec.z_hat)) return "cut not strictly violated";
  }
  if (r.status == RobustStatus::Optimal) {
    if (r.trace.empty()) return "optimal exit without iterations";
    const auto& last = r.trace.back();
    if (last.cut_added) return "optimal exit after adding a cut";
    if (static_cast<double>(last.regret - last.master_objective) > eps) return "certificate fails";
    if (r.lower_bound != r.upper_bound || r.regret != r.upper_bound) return "LB != UB on optimal exit";
    if (r.gap != 0.0) return "nonzero gap on optimal exit";
  }
  return {};
}

}  // namespace iris::test
