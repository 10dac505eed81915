#include "kkit/coloring_search.hpp"

#include <omp.h>

#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>

namespace kkit {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Feasible:
      return "feasible";
    case SearchStatus::Infeasible:
      return "infeasible";
    case SearchStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

using ClassSet = std::uint32_t;

class CappedSearch {
 public:
  CappedSearch(std::span<const VertexMask> edges, std::span<const int> caps, const Budget& budget)
      : edges_(edges.begin(), edges.end()), caps_(caps.begin(), caps.end()), k_(static_cast<int>(caps.size())),
        members_(caps.size()), domain_(edges.size(), 0), choice_(edges.size(), -1), meter_(budget) {
    ClassSet open = 0;
    for (int j = 0; j < k_; ++j)
      if (caps_[static_cast<std::size_t>(j)] >= 1) open |= ClassSet{1} << j;
    std::fill(domain_.begin(), domain_.end(), open);
    // Earlier class with the same cap, or -1.
    twin_before_.assign(caps.size(), -1);
    for (int j = 0; j < k_; ++j)
      for (int i = j - 1; i >= 0; --i)
        if (caps_[static_cast<std::size_t>(i)] == caps_[static_cast<std::size_t>(j)]) {
          twin_before_[static_cast<std::size_t>(j)] = i;
          break;
        }
  }

  void set_abort(const std::atomic<int>* found, int task) {
    found_ = found;
    task_ = task;
  }

  // Replays `prefix` (one class per leading edge). False if it is dead.
  bool replay(std::span<const int> prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const int j = prefix[i];
      if (!admissible(i, j) || !assign(i, j)) return false;
    }
    depth_ = prefix.size();
    return true;
  }

  bool run() {
    if (domain_wiped(depth_)) return false;
    return dfs(depth_);
  }

  // All live prefixes of the given depth, in DFS order.
  void collect(std::size_t depth, std::vector<std::vector<int>>& out) {
    if (domain_wiped(0)) return;
    collect_from(0, depth, out);
  }

  bool expired() const { return meter_.expired(); }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return meter_.nodes(); }
  const std::vector<int>& choice() const { return choice_; }

 private:
  struct TrailEntry {
    std::size_t edge;
    ClassSet old;
  };

  bool domain_wiped(std::size_t from) const {
    for (std::size_t f = from; f < edges_.size(); ++f)
      if (domain_[f] == 0) return true;
    return false;
  }

  bool admissible(std::size_t i, int j) const {
    if ((domain_[i] & (ClassSet{1} << j)) == 0) return false;
    if (!members_[static_cast<std::size_t>(j)].empty()) return true;
    const int twin = twin_before_[static_cast<std::size_t>(j)];
    return twin < 0 || !members_[static_cast<std::size_t>(twin)].empty();
  }

  // Adds edge i to class j and narrows later domains. The trail mark for the
  // undo is pushed first; returns false on a wipeout (state still needs undo).
  bool assign(std::size_t i, int j) {
    marks_.push_back(trail_.size());
    auto& cls = members_[static_cast<std::size_t>(j)];
    cls.push_back(edges_[i]);
    choice_[i] = j;
    const int cap = caps_[static_cast<std::size_t>(j)];
    const ClassSet bit = ClassSet{1} << j;
    for (std::size_t f = i + 1; f < edges_.size(); ++f) {
      if ((domain_[f] & bit) == 0) continue;
      if (has_matching_of_size(cls, cap, edges_[f])) {
        trail_.push_back({f, domain_[f]});
        domain_[f] &= ~bit;
        if (domain_[f] == 0) return false;
      }
    }
    return true;
  }

  void undo(std::size_t i, int j) {
    const std::size_t mark = marks_.back();
    marks_.pop_back();
    while (trail_.size() > mark) {
      domain_[trail_.back().edge] = trail_.back().old;
      trail_.pop_back();
    }
    members_[static_cast<std::size_t>(j)].pop_back();
    choice_[i] = -1;
  }

  bool stop_requested() {
    if (found_ != nullptr && found_->load(std::memory_order_relaxed) < task_) aborted_ = true;
    return aborted_ || !meter_.tick();
  }

  bool dfs(std::size_t i) {
    if (i == edges_.size()) return true;
    if (stop_requested()) return false;
    for (int j = 0; j < k_; ++j) {
      if (!admissible(i, j)) continue;
      if (assign(i, j) && dfs(i + 1)) return true;
      undo(i, j);
      if (meter_.expired() || aborted_) return false;
    }
    return false;
  }

  void collect_from(std::size_t i, std::size_t depth, std::vector<std::vector<int>>& out) {
    if (i == depth || i == edges_.size()) {
      out.emplace_back(choice_.begin(), choice_.begin() + static_cast<std::ptrdiff_t>(i));
      return;
    }
    for (int j = 0; j < k_; ++j) {
      if (!admissible(i, j)) continue;
      if (assign(i, j)) collect_from(i + 1, depth, out);
      undo(i, j);
    }
  }

  std::vector<VertexMask> edges_;
  std::vector<int> caps_;
  int k_;
  std::vector<std::vector<VertexMask>> members_;
  std::vector<ClassSet> domain_;
  std::vector<int> choice_;
  std::vector<int> twin_before_;
  std::vector<TrailEntry> trail_;
  std::vector<std::size_t> marks_;
  std::size_t depth_ = 0;
  NodeMeter meter_;
  const std::atomic<int>* found_ = nullptr;
  int task_ = 0;
  bool aborted_ = false;
};

void check_caps(std::span<const int> caps) {
  if (caps.size() > 32) throw std::invalid_argument("at most 32 color classes are supported");
  for (int c : caps)
    if (c < 0) throw std::invalid_argument("class caps must be nonnegative");
}

}  // namespace

CappedColoring find_capped_coloring_serial(std::span<const VertexMask> edges, std::span<const int> caps,
                                           const Budget& budget) {
  check_caps(caps);
  CappedSearch search(edges, caps, budget);
  CappedColoring out;
  const bool found = search.run();
  out.nodes = search.nodes();
  if (found) {
    out.status = SearchStatus::Feasible;
    out.classes = search.choice();
  } else {
    out.status = search.expired() ? SearchStatus::Unknown : SearchStatus::Infeasible;
  }
  return out;
}

CappedColoring find_capped_coloring(std::span<const VertexMask> edges, std::span<const int> caps,
                                    const SearchOptions& options) {
  check_caps(caps);
  if (options.threads <= 1 || edges.size() < 4) return find_capped_coloring_serial(edges, caps, options.budget);

  // Split deep enough to give every thread several subtrees.
  std::vector<std::vector<int>> prefixes;
  const std::size_t wanted = static_cast<std::size_t>(options.threads) * 4;
  for (std::size_t depth = 2; depth <= std::min<std::size_t>(edges.size(), 10); ++depth) {
    prefixes.clear();
    CappedSearch splitter(edges, caps, options.budget);
    splitter.collect(depth, prefixes);
    if (prefixes.size() >= wanted) break;
  }
  if (prefixes.empty()) {
    CappedColoring out;
    out.status = SearchStatus::Infeasible;
    return out;
  }

  struct TaskResult {
    bool found = false;
    bool expired = false;
    std::vector<int> classes;
    std::uint64_t nodes = 0;
  };
  std::vector<TaskResult> results(prefixes.size());
  std::atomic<int> first_found{std::numeric_limits<int>::max()};
  const int task_count = static_cast<int>(prefixes.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(options.threads)
  for (int t = 0; t < task_count; ++t) {
    if (first_found.load() < t) continue;
    CappedSearch search(edges, caps, options.budget);
    search.set_abort(&first_found, t);
    auto& r = results[static_cast<std::size_t>(t)];
    if (!search.replay(prefixes[static_cast<std::size_t>(t)])) continue;
    r.found = search.run();
    r.expired = search.expired();
    r.nodes = search.nodes();
    if (r.found) {
      r.classes = search.choice();
      int seen = first_found.load();
      while (t < seen && !first_found.compare_exchange_weak(seen, t)) {
      }
    }
  }

  CappedColoring out;
  bool any_expired = false;
  for (const auto& r : results) {
    out.nodes += r.nodes;
    if (r.found && out.status != SearchStatus::Feasible) {
      out.status = SearchStatus::Feasible;
      out.classes = r.classes;
    }
    if (r.expired && out.status != SearchStatus::Feasible) any_expired = true;
  }
  if (out.status != SearchStatus::Feasible)
    out.status = any_expired ? SearchStatus::Unknown : SearchStatus::Infeasible;
  return out;
}

}  // namespace kkit
