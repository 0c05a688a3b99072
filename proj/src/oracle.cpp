#include "iris/oracle.hpp"

#include <limits>
#include <stdexcept>

namespace iris {
namespace {

void guard(const Instance& instance) {
  if (quota_selection_count(instance) > kEnumerationGuard)
    throw std::length_error("instance too large for exhaustive enumeration");
}

// Depth-first enumeration of feasible selections, sets in order and
// combinations in lexicographic order within each set.
template <typename Visit>
void for_each_feasible(const Instance& instance, Visit&& visit) {
  const int m = instance.num_sets();
  Selection x(instance.num_items());
  std::vector<int> blocked(instance.num_items(), 0);

  auto choose = [&](auto&& self, int set, int from, int left) -> void {
    if (left == 0) {
      if (set + 1 == m) {
        visit(x);
      } else {
        self(self, set + 1, instance.offset(set + 1), instance.quota(set + 1));
      }
      return;
    }
    for (int f = from; f + left <= instance.offset(set + 1); ++f) {
      if (blocked[f]) continue;
      x.set(f, true);
      for (int g : instance.partners(f)) ++blocked[g];
      self(self, set, f + 1, left - 1);
      for (int g : instance.partners(f)) --blocked[g];
      x.set(f, false);
    }
  };
  if (m == 0) {
    visit(x);
    return;
  }
  choose(choose, 0, instance.offset(0), instance.quota(0));
}

}  // namespace

std::uint64_t quota_selection_count(const Instance& instance) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (int i = 0; i < instance.num_sets(); ++i) {
    const int r = instance.set_size(i);
    const int p = instance.quota(i);
    if (p < 0 || p > r) return 0;
    std::uint64_t c = 1;
    for (int k = 1; k <= std::min(p, r - p); ++k) c = c * static_cast<std::uint64_t>(r - k + 1) / k;
    if (c != 0 && total > kMax / c) return kMax;
    total *= c;
  }
  return total;
}

std::vector<Selection> enumerate_feasible(const Instance& instance) {
  guard(instance);
  std::vector<Selection> out;
  for_each_feasible(instance, [&](const Selection& x) { out.push_back(x); });
  return out;
}

RisSolution brute_force_ris(const Instance& instance, const Scenario& scenario) {
  guard(instance);
  RisSolution best;
  for_each_feasible(instance, [&](const Selection& x) {
    const Cost v = cost_of(scenario, x);
    if (!best.optimal() || v < best.value) {
      best.selection = x;
      best.value = v;
      best.status = RisStatus::Optimal;
    }
  });
  return best;
}

RobustResult brute_force_minmax_regret(const Instance& instance) {
  const auto feasible = enumerate_feasible(instance);
  RobustResult result;
  if (feasible.empty()) return result;

  std::vector<std::vector<int>> items;
  std::vector<Cost> lower;
  items.reserve(feasible.size());
  for (const auto& y : feasible) {
    items.push_back(y.items());
    Cost lo = 0;
    for (int f : items.back()) lo += instance.interval(f).lo;
    lower.push_back(lo);
  }

  bool have = false;
  for (std::size_t a = 0; a < feasible.size(); ++a) {
    const Selection& x = feasible[a];
    Cost own = 0;
    for (int f : items[a]) own += instance.interval(f).hi;
    // c(x).y = lo.y + sum over y's items also chosen by x of (hi - lo)
    Cost inner = std::numeric_limits<Cost>::max();
    for (std::size_t b = 0; b < feasible.size(); ++b) {
      Cost v = lower[b];
      for (int f : items[b])
        if (x.contains(f)) v += instance.interval(f).width();
      inner = std::min(inner, v);
    }
    const Cost regret = own - inner;
    if (!have || regret < result.regret) {
      result.x_star = x;
      result.regret = regret;
      have = true;
    }
  }
  result.status = RobustStatus::Optimal;
  result.lower_bound = result.upper_bound = result.regret;
  return result;
}

}  // namespace iris
