#pragma once

// Core domain model for restricted items selection (RIS) and its interval
// min-max regret variant (IRIS).
//
// Items are addressed either by an ItemRef (set, item) pair or by a flat
// index into the concatenation of all sets; Instance converts between the
// two. Every value type here is immutable after construction in the sense
// that solvers never mutate an Instance, Scenario or Selection they receive.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace iris {

using Cost = std::int64_t;

struct ItemRef {
  int set = 0;
  int item = 0;

  friend auto operator<=>(const ItemRef&, const ItemRef&) = default;
};

struct CostInterval {
  Cost lo = 0;
  Cost hi = 0;

  Cost width() const { return hi - lo; }
  bool degenerate() const { return lo == hi; }

  friend bool operator==(const CostInterval&, const CostInterval&) = default;
};

// Two items that cannot be selected together. Instances always hold pairs
// in canonical order (a < b).
struct ForbiddenPair {
  ItemRef a;
  ItemRef b;

  ForbiddenPair canonical() const { return b < a ? ForbiddenPair{b, a} : *this; }
  bool same_set() const { return a.set == b.set; }

  friend auto operator<=>(const ForbiddenPair&, const ForbiddenPair&) = default;
};

struct ItemSet {
  int quota = 0;
  std::vector<CostInterval> items;

  friend bool operator==(const ItemSet&, const ItemSet&) = default;
};

class Instance {
 public:
  Instance() = default;
  // Forbidden pairs are canonicalized and deduplicated; the number of merged
  // duplicates is kept for validation. Pairs with out-of-range references are
  // stored but ignored by the conflict adjacency.
  Instance(std::vector<ItemSet> sets, std::vector<ForbiddenPair> forbidden);

  const std::vector<ItemSet>& sets() const { return sets_; }
  const std::vector<ForbiddenPair>& forbidden() const { return forbidden_; }

  int num_sets() const { return static_cast<int>(sets_.size()); }
  int num_items() const { return static_cast<int>(set_of_.size()); }
  int set_size(int set) const { return static_cast<int>(sets_[set].items.size()); }
  int quota(int set) const { return sets_[set].quota; }
  int total_quota() const;
  // Flat index of item 0 of `set`; offset(num_sets()) == num_items().
  int offset(int set) const { return offsets_[set]; }

  bool valid_ref(ItemRef ref) const;
  int flat(ItemRef ref) const { return offsets_[ref.set] + ref.item; }
  ItemRef ref(int flat) const { return {set_of_[flat], flat - offsets_[set_of_[flat]]}; }
  int set_of(int flat) const { return set_of_[flat]; }
  const CostInterval& interval(int flat) const {
    return sets_[set_of_[flat]].items[flat - offsets_[set_of_[flat]]];
  }

  // Items that share a forbidden pair with `flat`, ascending.
  const std::vector<int>& partners(int flat) const { return partners_[flat]; }
  bool conflicts(int a, int b) const;

  std::size_t merged_duplicates() const { return merged_duplicates_; }
  bool degenerate() const;

  friend bool operator==(const Instance& l, const Instance& r) {
    return l.sets_ == r.sets_ && l.forbidden_ == r.forbidden_;
  }

 private:
  std::vector<ItemSet> sets_;
  std::vector<ForbiddenPair> forbidden_;
  std::vector<int> offsets_{0};
  std::vector<int> set_of_;
  std::vector<std::vector<int>> partners_;
  std::size_t merged_duplicates_ = 0;
};

// Characteristic vector x over flat item indices.
class Selection {
 public:
  Selection() = default;
  explicit Selection(int num_items) : bits_(num_items, 0) {}

  // Throws std::invalid_argument on out-of-range or repeated indices.
  static Selection from_chosen(const Instance& instance,
                               const std::vector<std::vector<int>>& chosen);
  static Selection from_items(int num_items, const std::vector<int>& flat_items);

  std::vector<std::vector<int>> chosen(const Instance& instance) const;
  std::vector<int> items() const;

  int size() const { return static_cast<int>(bits_.size()); }
  int count() const;
  bool contains(int flat) const { return bits_[flat] != 0; }
  void set(int flat, bool on) { bits_[flat] = on ? 1 : 0; }
  int count_in_set(const Instance& instance, int set) const;

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const Selection&, const Selection&) = default;
  // Lexicographic order on the ascending list of chosen flat indices.
  friend bool operator<(const Selection& l, const Selection& r);

 private:
  std::vector<std::uint8_t> bits_;
};

struct SelectionHash {
  std::size_t operator()(const Selection& s) const noexcept;
};

struct Scenario {
  std::vector<Cost> cost;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Affine function x -> coeff . x - constant over binary selections.
struct LinearForm {
  std::vector<Cost> coeff;
  Cost constant = 0;

  Cost eval(const Selection& x) const;
};

enum class RisStatus { Optimal, Infeasible };

// Raised by operations that need at least one feasible selection.
struct InfeasibleInstance : std::runtime_error {
  InfeasibleInstance() : std::runtime_error("instance has no feasible selection") {}
};

struct RisSolution {
  Selection selection;
  Cost value = 0;
  RisStatus status = RisStatus::Infeasible;

  bool optimal() const { return status == RisStatus::Optimal; }
};

using RisSolverFn = std::function<RisSolution(const Instance&, const Scenario&)>;

struct RegretReport {
  Cost regret = 0;
  Selection witness;
  Scenario scenario;
};

enum class Severity { Error, Warning };

struct Issue {
  Severity severity;
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool empty() const { return issues.empty(); }
  // True when no issue is an error; warnings do not make an instance unusable.
  bool ok() const;
  std::string to_string() const;
};

ValidationReport validate(const Instance& instance);
// Throws std::invalid_argument listing the errors when validate() finds any.
void require_valid(const Instance& instance);

bool is_feasible(const Instance& instance, const Selection& x);

// Worst case for x: chosen items at their upper bound, everything else at
// its lower bound.
Scenario worst_case_scenario(const Instance& instance, const Selection& x);
Scenario lower_scenario(const Instance& instance);
Scenario upper_scenario(const Instance& instance);
Scenario midpoint_scenario(const Instance& instance);
// Each cost is independently lo or hi with probability 1/2.
Scenario sample_extreme_scenario(const Instance& instance, std::mt19937_64& rng);

Cost cost_of(const Scenario& scenario, const Selection& x);

// R(x) = c(x).x - min_{y in F} c(x).y, with the inner minimum delegated to
// `solver`. Throws std::runtime_error when the solver reports infeasibility.
RegretReport evaluate_regret(const Instance& instance, const Selection& x,
                             const RisSolverFn& solver);

}  // namespace iris
