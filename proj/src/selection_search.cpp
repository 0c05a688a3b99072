#include "selection_search.hpp"

#include <algorithm>
#include <numeric>

namespace iris::detail {
namespace {

enum : std::int8_t { kFree = 0, kIn = 1, kOut = 2 };

class Search {
 public:
  Search(const Instance& instance, const std::vector<LinearForm>& forms)
      : inst_(instance),
        forms_(forms),
        n_(instance.num_items()),
        m_(instance.num_sets()),
        state_(n_, kFree),
        need_(m_),
        avail_(m_),
        fixed_(forms.size(), 0) {
    order_.resize(forms_.size());
    for (std::size_t k = 0; k < forms_.size(); ++k) {
      auto& ord = order_[k];
      ord.resize(n_);
      std::iota(ord.begin(), ord.end(), 0);
      const auto& c = forms_[k].coeff;
      for (int i = 0; i < m_; ++i) {
        std::stable_sort(ord.begin() + inst_.offset(i), ord.begin() + inst_.offset(i + 1),
                         [&](int a, int b) { return c[a] < c[b]; });
      }
    }
    for (int i = 0; i < m_; ++i) {
      need_[i] = inst_.quota(i);
      avail_[i] = inst_.set_size(i);
    }
  }

  // Forces the initial consequences of the quotas. False if infeasible.
  bool root_propagate() {
    for (int i = 0; i < m_; ++i) {
      if (avail_[i] < need_[i]) return false;
      if (avail_[i] == need_[i])
        for (int f = inst_.offset(i); f < inst_.offset(i + 1); ++f) queue_.push_back({f, true});
    }
    return drain();
  }

  bool decide(int item, bool in) {
    queue_.push_back({item, in});
    return drain();
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int f = trail_.back();
      trail_.pop_back();
      const int s = inst_.set_of(f);
      if (state_[f] == kIn) {
        ++need_[s];
        for (std::size_t k = 0; k < forms_.size(); ++k) fixed_[k] -= forms_[k].coeff[f];
      }
      ++avail_[s];
      state_[f] = kFree;
    }
  }

  // Max over forms of the per-form relaxed minimum. Stops early and returns
  // a value >= cutoff as soon as one form reaches cutoff. `binding` receives
  // the maximizing form.
  Cost bound(Cost cutoff, std::size_t& binding) const {
    Cost best = std::numeric_limits<Cost>::min();
    const std::size_t nf = forms_.size();
    const std::size_t start = binding;
    for (std::size_t step = 0; step < nf; ++step) {
      const std::size_t k = (start + step) % nf;
      const auto& c = forms_[k].coeff;
      const auto& ord = order_[k];
      Cost v = fixed_[k] - forms_[k].constant;
      for (int i = 0; i < m_; ++i) {
        int take = need_[i];
        for (int pos = inst_.offset(i); take > 0; ++pos) {
          const int f = ord[pos];
          if (state_[f] == kFree) {
            v += c[f];
            --take;
          }
        }
      }
      if (v > best) {
        best = v;
        binding = k;
        if (v >= cutoff) return v;
      }
    }
    return best;
  }

  void run(const SearchOptions& options, SearchResult& result) {
    best_value_ = options.accept_below;
    if (options.incumbent && is_feasible(inst_, *options.incumbent)) {
      const Cost v = value_of(*options.incumbent);
      if (v < best_value_) {
        best_value_ = v;
        best_ = *options.incumbent;
      }
    }
    stop_at_ = options.stop_at;
    deadline_ = options.deadline;
    if (best_ && best_value_ <= stop_at_) {
      stopped_ = true;
    } else if (root_propagate()) {
      std::size_t binding = 0;
      dfs(binding);
    }
    result.status = timed_out_ ? SearchStatus::TimeLimit
                    : stopped_ ? SearchStatus::Stopped
                               : SearchStatus::Complete;
    result.best = best_;
    result.value = best_ ? best_value_ : 0;
    result.nodes = nodes_;
  }

 private:
  struct Decision {
    int item;
    bool in;
  };

  Cost value_of(const Selection& x) const {
    Cost v = std::numeric_limits<Cost>::min();
    for (const auto& form : forms_) v = std::max(v, form.eval(x));
    return v;
  }

  bool drain() {
    bool ok = true;
    while (!queue_.empty() && ok) {
      const Decision d = queue_.back();
      queue_.pop_back();
      ok = d.in ? apply_in(d.item) : apply_out(d.item);
    }
    queue_.clear();
    return ok;
  }

  bool apply_in(int f) {
    if (state_[f] == kIn) return true;
    if (state_[f] == kOut) return false;
    const int s = inst_.set_of(f);
    if (need_[s] == 0) return false;
    state_[f] = kIn;
    trail_.push_back(f);
    --need_[s];
    --avail_[s];
    for (std::size_t k = 0; k < forms_.size(); ++k) fixed_[k] += forms_[k].coeff[f];
    for (int g : inst_.partners(f)) {
      if (state_[g] == kIn) return false;
      if (state_[g] == kFree) queue_.push_back({g, false});
    }
    return true;
  }

  bool apply_out(int f) {
    if (state_[f] == kOut) return true;
    if (state_[f] == kIn) return false;
    const int s = inst_.set_of(f);
    state_[f] = kOut;
    trail_.push_back(f);
    --avail_[s];
    if (avail_[s] < need_[s]) return false;
    if (avail_[s] == need_[s] && need_[s] > 0) {
      for (int g = inst_.offset(s); g < inst_.offset(s + 1); ++g)
        if (state_[g] == kFree) queue_.push_back({g, true});
    }
    return true;
  }

  void dfs(std::size_t binding) {
    ++nodes_;
    if ((nodes_ & 1023u) == 1 && deadline_ && std::chrono::steady_clock::now() >= *deadline_)
      timed_out_ = true;
    if (timed_out_ || stopped_) return;

    const Cost b = bound(best_value_, binding);
    if (b >= best_value_) return;

    // Most constrained set: smallest slack between available items and quota.
    int set = -1;
    for (int i = 0; i < m_; ++i) {
      if (need_[i] == 0) continue;
      if (set < 0 || avail_[i] - need_[i] < avail_[set] - need_[set]) set = i;
    }
    if (set < 0) {
      best_value_ = b;
      best_ = Selection(n_);
      for (int f = 0; f < n_; ++f)
        if (state_[f] == kIn) best_->set(f, true);
      if (best_value_ <= stop_at_) stopped_ = true;
      return;
    }

    int item = -1;
    const auto& ord = order_[binding];
    for (int pos = inst_.offset(set); pos < inst_.offset(set + 1); ++pos) {
      if (state_[ord[pos]] == kFree) {
        item = ord[pos];
        break;
      }
    }

    const std::size_t mark = trail_.size();
    if (decide(item, true)) dfs(binding);
    undo(mark);
    if (timed_out_ || stopped_) return;
    if (decide(item, false)) dfs(binding);
    undo(mark);
  }

  const Instance& inst_;
  const std::vector<LinearForm>& forms_;
  int n_;
  int m_;
  std::vector<std::vector<int>> order_;
  std::vector<std::int8_t> state_;
  std::vector<int> need_;
  std::vector<int> avail_;
  std::vector<Cost> fixed_;
  std::vector<int> trail_;
  std::vector<Decision> queue_;

  Cost best_value_ = 0;
  std::optional<Selection> best_;
  Cost stop_at_ = std::numeric_limits<Cost>::min();
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  bool stopped_ = false;

  friend std::optional<Cost> node_bound(const Instance&, const std::vector<LinearForm>&,
                                        const std::vector<int>&, const std::vector<int>&);
};

}  // namespace

SearchResult minimize_max_linear(const Instance& instance, const std::vector<LinearForm>& forms,
                                 const SearchOptions& options) {
  SearchResult result;
  Search search(instance, forms);
  search.run(options, result);
  return result;
}

std::optional<Cost> node_bound(const Instance& instance, const std::vector<LinearForm>& forms,
                               const std::vector<int>& fixed_in,
                               const std::vector<int>& fixed_out) {
  Search search(instance, forms);
  if (!search.root_propagate()) return std::nullopt;
  for (int f : fixed_in)
    if (!search.decide(f, true)) return std::nullopt;
  for (int f : fixed_out)
    if (!search.decide(f, false)) return std::nullopt;
  std::size_t binding = 0;
  return search.bound(std::numeric_limits<Cost>::max(), binding);
}

}  // namespace iris::detail
