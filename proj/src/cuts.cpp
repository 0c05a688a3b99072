#include "iris/cuts.hpp"

#include <algorithm>

namespace iris {

bool CutSet::add(Selection y) {
  if (!seen_.insert(y).second) return false;
  cuts_.push_back({std::move(y), next_id_++, 0});
  return true;
}

std::uint64_t CutSet::newest_id() const {
  return cuts_.empty() ? 0 : cuts_.back().id;
}

void CutSet::set_slacks(const Instance& instance, const Selection& x_hat, Cost z_hat) {
  const Scenario c = worst_case_scenario(instance, x_hat);
  for (auto& cut : cuts_) cut.slack = cost_of(c, cut.y) - z_hat;
}

void CutSet::remove_ids(const std::vector<std::uint64_t>& ids) {
  auto doomed = [&](const Cut& cut) {
    return std::find(ids.begin(), ids.end(), cut.id) != ids.end();
  };
  for (const auto& cut : cuts_)
    if (doomed(cut)) seen_.erase(cut.y);
  cuts_.erase(std::remove_if(cuts_.begin(), cuts_.end(), doomed), cuts_.end());
}

CutSet prune_cuts(const CutSet& cuts, int count) {
  CutSet out = cuts;
  if (cuts.size() <= 1 || count <= 0) return out;
  const std::uint64_t newest = cuts.newest_id();
  std::vector<const Cut*> candidates;
  for (const auto& cut : cuts.cuts())
    if (cut.id != newest) candidates.push_back(&cut);
  std::stable_sort(candidates.begin(), candidates.end(), [](const Cut* a, const Cut* b) {
    if (a->slack != b->slack) return a->slack > b->slack;
    return a->id < b->id;
  });
  const std::size_t drop = std::min<std::size_t>(count, candidates.size());
  std::vector<std::uint64_t> ids;
  for (std::size_t k = 0; k < drop; ++k) ids.push_back(candidates[k]->id);
  out.remove_ids(ids);
  return out;
}

}  // namespace iris
