#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "iris/model.hpp"

namespace iris {

// Adversary selection y defining the master constraint c(x).y >= z.
struct Cut {
  Selection y;
  std::uint64_t id = 0;  // insertion order; larger is newer
  Cost slack = 0;        // c(x_hat).y - z_hat from the last master solve
};

class CutSet {
 public:
  // Appends y unless an identical cut is already present.
  bool add(Selection y);
  bool contains(const Selection& y) const { return seen_.count(y) > 0; }

  std::size_t size() const { return cuts_.size(); }
  bool empty() const { return cuts_.empty(); }
  const std::vector<Cut>& cuts() const { return cuts_; }
  const Cut& operator[](std::size_t i) const { return cuts_[i]; }
  std::uint64_t newest_id() const;

  void set_slacks(const Instance& instance, const Selection& x_hat, Cost z_hat);
  void set_slack(std::size_t index, Cost slack) { cuts_[index].slack = slack; }
  void remove_ids(const std::vector<std::uint64_t>& ids);

 private:
  std::vector<Cut> cuts_;
  std::unordered_set<Selection, SelectionHash> seen_;
  std::uint64_t next_id_ = 0;
};

// Drops the `count` cuts with the largest slack; equal slacks drop the oldest
// first and the newest cut is never dropped. At most size() - 1 cuts go.
CutSet prune_cuts(const CutSet& cuts, int count);

}  // namespace iris
