#include "iris/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace iris {

Instance::Instance(std::vector<ItemSet> sets, std::vector<ForbiddenPair> forbidden)
    : sets_(std::move(sets)) {
  offsets_.assign(1, 0);
  for (int i = 0; i < num_sets(); ++i) {
    offsets_.push_back(offsets_.back() + static_cast<int>(sets_[i].items.size()));
    for (std::size_t j = 0; j < sets_[i].items.size(); ++j) set_of_.push_back(i);
  }

  for (auto& pair : forbidden) pair = pair.canonical();
  std::sort(forbidden.begin(), forbidden.end());
  auto last = std::unique(forbidden.begin(), forbidden.end());
  merged_duplicates_ = static_cast<std::size_t>(forbidden.end() - last);
  forbidden.erase(last, forbidden.end());
  forbidden_ = std::move(forbidden);

  partners_.assign(num_items(), {});
  for (const auto& pair : forbidden_) {
    if (!valid_ref(pair.a) || !valid_ref(pair.b) || pair.a == pair.b) continue;
    const int a = flat(pair.a);
    const int b = flat(pair.b);
    partners_[a].push_back(b);
    partners_[b].push_back(a);
  }
  for (auto& p : partners_) std::sort(p.begin(), p.end());
}

int Instance::total_quota() const {
  int total = 0;
  for (const auto& s : sets_) total += s.quota;
  return total;
}

bool Instance::valid_ref(ItemRef ref) const {
  return ref.set >= 0 && ref.set < num_sets() && ref.item >= 0 &&
         ref.item < set_size(ref.set);
}

bool Instance::conflicts(int a, int b) const {
  const auto& p = partners_[a];
  return std::binary_search(p.begin(), p.end(), b);
}

bool Instance::degenerate() const {
  for (const auto& s : sets_)
    for (const auto& c : s.items)
      if (!c.degenerate()) return false;
  return true;
}

Selection Selection::from_chosen(const Instance& instance,
                                 const std::vector<std::vector<int>>& chosen) {
  if (static_cast<int>(chosen.size()) != instance.num_sets())
    throw std::invalid_argument("selection lists " + std::to_string(chosen.size()) +
                                " sets, instance has " +
                                std::to_string(instance.num_sets()));
  Selection x(instance.num_items());
  for (int i = 0; i < instance.num_sets(); ++i) {
    for (int j : chosen[i]) {
      if (!instance.valid_ref({i, j}))
        throw std::invalid_argument("selection item (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") out of range");
      const int f = instance.flat({i, j});
      if (x.contains(f))
        throw std::invalid_argument("selection repeats item (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      x.set(f, true);
    }
  }
  return x;
}

Selection Selection::from_items(int num_items, const std::vector<int>& flat_items) {
  Selection x(num_items);
  for (int f : flat_items) x.set(f, true);
  return x;
}

std::vector<std::vector<int>> Selection::chosen(const Instance& instance) const {
  std::vector<std::vector<int>> out(instance.num_sets());
  for (int f = 0; f < size(); ++f)
    if (contains(f)) out[instance.set_of(f)].push_back(instance.ref(f).item);
  return out;
}

std::vector<int> Selection::items() const {
  std::vector<int> out;
  for (int f = 0; f < size(); ++f)
    if (contains(f)) out.push_back(f);
  return out;
}

int Selection::count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

int Selection::count_in_set(const Instance& instance, int set) const {
  int c = 0;
  for (int f = instance.offset(set); f < instance.offset(set + 1); ++f) c += bits_[f];
  return c;
}

bool operator<(const Selection& l, const Selection& r) {
  const auto a = l.items();
  const auto b = r.items();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t SelectionHash::operator()(const Selection& s) const noexcept {
  // FNV-1a over the bit vector.
  std::size_t h = 1469598103934665603ull;
  for (auto b : s.bits()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

Cost LinearForm::eval(const Selection& x) const {
  Cost v = -constant;
  for (int f = 0; f < x.size(); ++f)
    if (x.contains(f)) v += coeff[f];
  return v;
}

bool ValidationReport::ok() const {
  return std::none_of(issues.begin(), issues.end(),
                      [](const Issue& i) { return i.severity == Severity::Error; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& issue : issues)
    os << (issue.severity == Severity::Error ? "error: " : "warning: ") << issue.message
       << '\n';
  return os.str();
}

namespace {

std::string ref_str(ItemRef r) {
  return "(" + std::to_string(r.set) + "," + std::to_string(r.item) + ")";
}

}  // namespace

ValidationReport validate(const Instance& instance) {
  ValidationReport report;
  auto error = [&](std::string msg) {
    report.issues.push_back({Severity::Error, std::move(msg)});
  };
  auto warning = [&](std::string msg) {
    report.issues.push_back({Severity::Warning, std::move(msg)});
  };

  if (instance.num_sets() == 0) error("instance has no item sets");
  for (int i = 0; i < instance.num_sets(); ++i) {
    const auto& set = instance.sets()[i];
    const std::string name = "set " + std::to_string(i);
    if (set.items.empty()) error(name + " has no items");
    if (set.quota <= 0) error(name + ": quota must be positive");
    if (set.quota > static_cast<int>(set.items.size()))
      error(name + ": quota exceeds set size");
    for (std::size_t j = 0; j < set.items.size(); ++j) {
      const auto& c = set.items[j];
      const std::string item = "item " + ref_str({i, static_cast<int>(j)});
      if (c.lo < 0) error(item + ": negative cost");
      if (c.lo > c.hi) error(item + ": lower bound exceeds upper bound");
    }
  }
  for (const auto& pair : instance.forbidden()) {
    if (!instance.valid_ref(pair.a) || !instance.valid_ref(pair.b)) {
      error("forbidden pair " + ref_str(pair.a) + "-" + ref_str(pair.b) +
            " references a missing item");
    } else if (pair.a == pair.b) {
      error("forbidden pair " + ref_str(pair.a) + "-" + ref_str(pair.b) +
            " pairs an item with itself");
    } else if (pair.same_set()) {
      warning("forbidden pair " + ref_str(pair.a) + "-" + ref_str(pair.b) +
              " lies within a single set");
    }
  }
  if (instance.merged_duplicates() > 0)
    warning(std::to_string(instance.merged_duplicates()) +
            " duplicate forbidden pair(s) merged");
  return report;
}

void require_valid(const Instance& instance) {
  const auto report = validate(instance);
  if (!report.ok()) throw std::invalid_argument("invalid instance:\n" + report.to_string());
}

bool is_feasible(const Instance& instance, const Selection& x) {
  if (x.size() != instance.num_items()) return false;
  for (int i = 0; i < instance.num_sets(); ++i)
    if (x.count_in_set(instance, i) != instance.quota(i)) return false;
  for (int f = 0; f < x.size(); ++f) {
    if (!x.contains(f)) continue;
    for (int g : instance.partners(f))
      if (x.contains(g)) return false;
  }
  return true;
}

Scenario worst_case_scenario(const Instance& instance, const Selection& x) {
  Scenario s;
  s.cost.resize(instance.num_items());
  for (int f = 0; f < instance.num_items(); ++f) {
    const auto& c = instance.interval(f);
    s.cost[f] = c.lo - (c.lo - c.hi) * (x.contains(f) ? 1 : 0);
  }
  return s;
}

Scenario lower_scenario(const Instance& instance) {
  Scenario s;
  for (int f = 0; f < instance.num_items(); ++f) s.cost.push_back(instance.interval(f).lo);
  return s;
}

Scenario upper_scenario(const Instance& instance) {
  Scenario s;
  for (int f = 0; f < instance.num_items(); ++f) s.cost.push_back(instance.interval(f).hi);
  return s;
}

Scenario midpoint_scenario(const Instance& instance) {
  Scenario s;
  for (int f = 0; f < instance.num_items(); ++f) {
    const auto& c = instance.interval(f);
    s.cost.push_back((c.lo + c.hi) / 2);  // nonnegative, so truncation is floor
  }
  return s;
}

Scenario sample_extreme_scenario(const Instance& instance, std::mt19937_64& rng) {
  Scenario s;
  s.cost.reserve(instance.num_items());
  std::uint64_t word = 0;
  int bits_left = 0;
  for (int f = 0; f < instance.num_items(); ++f) {
    if (bits_left == 0) {
      word = rng();
      bits_left = 64;
    }
    const auto& c = instance.interval(f);
    s.cost.push_back((word & 1u) ? c.hi : c.lo);
    word >>= 1;
    --bits_left;
  }
  return s;
}

Cost cost_of(const Scenario& scenario, const Selection& x) {
  Cost total = 0;
  for (int f = 0; f < x.size(); ++f)
    if (x.contains(f)) total += scenario.cost[f];
  return total;
}

RegretReport evaluate_regret(const Instance& instance, const Selection& x,
                             const RisSolverFn& solver) {
  RegretReport report;
  report.scenario = worst_case_scenario(instance, x);
  auto best = solver(instance, report.scenario);
  if (!best.optimal())
    throw std::runtime_error("regret evaluation: inner selection problem is infeasible");
  report.regret = cost_of(report.scenario, x) - best.value;
  report.witness = std::move(best.selection);
  return report;
}

}  // namespace iris
