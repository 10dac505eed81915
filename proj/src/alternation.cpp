#include "kkit/alternation.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>

namespace kkit {

SignedVector::SignedVector(int p, std::vector<std::uint8_t> entries) : p_(p), x_(std::move(entries)) {
  if (p < 2) throw std::invalid_argument("group order p must be at least 2, got " + std::to_string(p));
  if (p > 255) throw std::invalid_argument("group order p must be at most 255");
  if (x_.size() > static_cast<std::size_t>(kMaxVertices))
    throw std::invalid_argument("signed vectors are limited to 64 entries");
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (x_[i] > p)
      throw std::invalid_argument("entry " + std::to_string(i + 1) + " = " + std::to_string(x_[i]) +
                                  " exceeds p = " + std::to_string(p));
}

VertexMask SignedVector::part(int eps) const {
  VertexMask m = 0;
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (x_[i] == eps) m |= VertexMask{1} << i;
  return m;
}

VertexMask SignedVector::support() const {
  VertexMask m = 0;
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (x_[i] != 0) m |= VertexMask{1} << i;
  return m;
}

int SignedVector::first_nonzero() const {
  for (std::uint8_t v : x_)
    if (v != 0) return v;
  return 0;
}

SignedVector SignedVector::multiplied(int j) const {
  SignedVector out = *this;
  for (auto& v : out.x_)
    if (v != 0) v = static_cast<std::uint8_t>((v + j - 1) % p_ + 1);
  return out;
}

int alt(std::span<const std::uint8_t> entries) {
  int runs = 0;
  std::uint8_t last = 0;
  for (std::uint8_t v : entries) {
    if (v == 0 || v == last) continue;
    ++runs;
    last = v;
  }
  return runs;
}

VertexOrdering::VertexOrdering(std::vector<int> map, int vertex_count) : map_(std::move(map)) {
  if (map_.size() != static_cast<std::size_t>(vertex_count))
    throw std::invalid_argument("ordering must list all " + std::to_string(vertex_count) + " vertices");
  VertexMask seen = 0;
  for (int v : map_) {
    if (v < 1 || v > vertex_count)
      throw std::invalid_argument("ordering maps to vertex " + std::to_string(v) + " outside [1, " +
                                  std::to_string(vertex_count) + "]");
    if ((seen & vertex_bit(v)) != 0)
      throw std::invalid_argument("ordering is not injective: vertex " + std::to_string(v) + " repeats");
    seen |= vertex_bit(v);
  }
}

VertexOrdering VertexOrdering::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i + 1;
  return VertexOrdering(std::move(m), n);
}

VertexMask VertexOrdering::image(VertexMask positions) const {
  VertexMask out = 0;
  while (positions != 0) {
    out |= vertex_bit((*this)(lowest_vertex(positions)));
    positions &= positions - 1;
  }
  return out;
}

bool is_admissible(const Hypergraph& h, const VertexOrdering& sigma, const SignedVector& x) {
  for (int eps = 1; eps <= x.order(); ++eps) {
    const VertexMask cls = sigma.image(x.part(eps));
    for (VertexMask e : h.edges())
      if ((e & ~cls) == 0) return false;
  }
  return true;
}

namespace {

void require_order(int p) {
  if (p < 2) throw std::invalid_argument("group order p must be at least 2, got " + std::to_string(p));
}

// Best alternation over the first k positions of a (partial) ordering. Only
// fully alternating supports are explored: any X can be thinned to one with
// the same alt whose classes are subsets of the original ones. Values are
// introduced in increasing order since the constraint is symmetric in ε.
class AltProbe {
 public:
  AltProbe(const Hypergraph& h, int p) : p_(p), incident_(static_cast<std::size_t>(h.vertex_count())) {
    for (VertexMask e : h.edges())
      for (int v : vertices_of(e)) incident_[static_cast<std::size_t>(v - 1)].push_back(e);
    classes_.assign(static_cast<std::size_t>(p) + 1, 0);
  }

  // Largest alt on `order`, or any value >= stop_at once one is seen.
  int run(std::span<const int> order, int stop_at, NodeMeter& meter, std::vector<std::uint8_t>* witness) {
    order_ = order;
    stop_at_ = stop_at;
    best_ = 0;
    meter_ = &meter;
    witness_ = witness;
    current_.assign(order.size(), 0);
    if (witness_ != nullptr) witness_->assign(order.size(), 0);
    std::fill(classes_.begin(), classes_.end(), 0);
    dfs(0, 0, 0, 0);
    return best_;
  }

 private:
  bool independent_with(int v, VertexMask cls) const {
    const VertexMask grown = cls | vertex_bit(v);
    for (VertexMask e : incident_[static_cast<std::size_t>(v - 1)])
      if ((e & ~grown) == 0) return false;
    return true;
  }

  void dfs(std::size_t pos, int last, int alt_so_far, int used) {
    if (alt_so_far > best_) {
      best_ = alt_so_far;
      if (witness_ != nullptr) {
        std::fill(witness_->begin(), witness_->end(), 0);
        std::copy(current_.begin(), current_.begin() + static_cast<std::ptrdiff_t>(pos), witness_->begin());
      }
    }
    if (best_ >= stop_at_) return;
    if (alt_so_far + static_cast<int>(order_.size() - pos) <= best_) return;
    if (!meter_->tick()) return;
    const int v = order_[pos];
    const int limit = std::min(p_, used + 1);
    for (int eps = 1; eps <= limit; ++eps) {
      if (eps == last) continue;
      VertexMask& cls = classes_[static_cast<std::size_t>(eps)];
      if (!independent_with(v, cls)) continue;
      cls |= vertex_bit(v);
      current_[pos] = static_cast<std::uint8_t>(eps);
      dfs(pos + 1, eps, alt_so_far + 1, std::max(used, eps));
      current_[pos] = 0;
      cls &= ~vertex_bit(v);
      if (best_ >= stop_at_ || meter_->expired()) return;
    }
    dfs(pos + 1, last, alt_so_far, used);
  }

  int p_;
  std::vector<std::vector<VertexMask>> incident_;
  std::vector<VertexMask> classes_;
  std::span<const int> order_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t>* witness_ = nullptr;
  NodeMeter* meter_ = nullptr;
  int stop_at_ = 0;
  int best_ = 0;
};

std::vector<VertexMask> lower_twins(const Hypergraph& h) {
  const auto classes = twin_classes(h);
  std::vector<VertexMask> lower(static_cast<std::size_t>(h.vertex_count()), 0);
  for (VertexMask cls : classes)
    for (int v : vertices_of(cls)) lower[static_cast<std::size_t>(v - 1)] = cls & (vertex_bit(v) - 1);
  return lower;
}

// Branch-and-bound over orderings in lexicographic order. A prefix whose own
// alternation already reaches the incumbent cannot lead to a better ordering.
class OrderingSearch {
 public:
  OrderingSearch(const Hypergraph& h, int p, const Budget& budget, const std::atomic<int>* shared_best)
      : n_(h.vertex_count()), lower_twins_(lower_twins(h)), probe_(h, p), meter_(budget),
        shared_best_(shared_best) {
    order_.reserve(static_cast<std::size_t>(n_));
  }

  // Searches orderings extending `prefix`.
  void run(std::span<const int> prefix) {
    order_.assign(prefix.begin(), prefix.end());
    VertexMask placed = 0;
    for (int v : prefix) placed |= vertex_bit(v);
    if (order_.size() == static_cast<std::size_t>(n_)) {
      leaf();
      return;
    }
    if (!order_.empty() && pruned()) return;
    dfs(placed);
  }

  int best() const { return best_; }
  const std::vector<int>& best_order() const { return best_order_; }
  const std::vector<std::uint8_t>& best_witness() const { return best_witness_; }
  bool expired() const { return meter_.expired(); }
  std::uint64_t nodes() const { return meter_.nodes(); }

  static bool can_place(const std::vector<VertexMask>& lower, VertexMask placed, int v) {
    const VertexMask need = lower[static_cast<std::size_t>(v - 1)];
    return (placed & vertex_bit(v)) == 0 && (placed & need) == need;
  }
  const std::vector<VertexMask>& lower() const { return lower_twins_; }

 private:
  // Local ties are pruned; cross-thread only strict improvements are possible
  // losers, so a task never drops an ordering that could tie the final optimum.
  int stop_at() const {
    int s = best_;
    if (shared_best_ != nullptr) s = std::min(s, shared_best_->load(std::memory_order_relaxed) + 1);
    return s;
  }

  bool pruned() { return probe_.run(order_, stop_at(), meter_, nullptr) >= stop_at(); }

  void leaf() {
    std::vector<std::uint8_t> witness;
    const int value = probe_.run(order_, stop_at(), meter_, &witness);
    if (meter_.expired() || value >= stop_at()) return;
    best_ = value;
    best_order_ = order_;
    best_witness_ = std::move(witness);
  }

  void dfs(VertexMask placed) {
    for (int v = 1; v <= n_; ++v) {
      if (!can_place(lower_twins_, placed, v)) continue;
      if (!meter_.tick()) return;
      order_.push_back(v);
      if (order_.size() == static_cast<std::size_t>(n_))
        leaf();
      else if (!pruned())
        dfs(placed | vertex_bit(v));
      order_.pop_back();
      if (meter_.expired()) return;
    }
  }

  int n_;
  std::vector<VertexMask> lower_twins_;
  AltProbe probe_;
  NodeMeter meter_;
  const std::atomic<int>* shared_best_;
  std::vector<int> order_;
  int best_ = std::numeric_limits<int>::max();
  std::vector<int> best_order_;
  std::vector<std::uint8_t> best_witness_;
};

void check_size(const Hypergraph& h, const AlternationOptions& options) {
  if (h.vertex_count() > options.max_vertices)
    throw BudgetExceeded("exact alternation number limited to n <= " + std::to_string(options.max_vertices) +
                         " vertices, got " + std::to_string(h.vertex_count()));
}

AlternationResult finish(const Hypergraph& h, int p, int value, const std::vector<int>& order,
                         const std::vector<std::uint8_t>& witness, std::uint64_t nodes) {
  AlternationResult result;
  result.value = value;
  result.ordering = VertexOrdering(order, h.vertex_count());
  result.witness = SignedVector(p, witness);
  result.nodes = nodes;
  return result;
}

}  // namespace

std::vector<VertexMask> twin_classes(const Hypergraph& h) {
  const int n = h.vertex_count();
  const auto edges = h.edges();
  std::vector<VertexMask> classes;
  VertexMask assigned = 0;
  std::vector<VertexMask> swapped(edges.size());
  for (int u = 1; u <= n; ++u) {
    if ((assigned & vertex_bit(u)) != 0) continue;
    VertexMask cls = vertex_bit(u);
    for (int v = u + 1; v <= n; ++v) {
      if ((assigned & vertex_bit(v)) != 0) continue;
      const VertexMask bu = vertex_bit(u);
      const VertexMask bv = vertex_bit(v);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const VertexMask e = edges[i];
        const bool has_u = (e & bu) != 0;
        const bool has_v = (e & bv) != 0;
        swapped[i] = (e & ~(bu | bv)) | (has_u ? bv : 0) | (has_v ? bu : 0);
      }
      std::sort(swapped.begin(), swapped.end());
      if (std::equal(swapped.begin(), swapped.end(), edges.begin())) cls |= bv;
    }
    assigned |= cls;
    classes.push_back(cls);
  }
  return classes;
}

AltWithOrderingResult alt_with_ordering(const Hypergraph& h, int p, const VertexOrdering& sigma) {
  require_order(p);
  if (sigma.size() != h.vertex_count())
    throw std::invalid_argument("ordering size " + std::to_string(sigma.size()) + " differs from vertex count " +
                                std::to_string(h.vertex_count()));
  Budget unlimited;
  NodeMeter meter(unlimited);
  AltProbe probe(h, p);
  std::vector<std::uint8_t> witness;
  AltWithOrderingResult result;
  result.value = probe.run(sigma.map(), std::numeric_limits<int>::max(), meter, &witness);
  result.witness = SignedVector(p, std::move(witness));
  return result;
}

AlternationResult alternation_number_serial(const Hypergraph& h, int p, const AlternationOptions& options) {
  require_order(p);
  check_size(h, options);
  OrderingSearch search(h, p, options.budget, nullptr);
  search.run({});
  if (search.expired()) throw BudgetExceeded("alternation search exceeded its budget");
  return finish(h, p, search.best(), search.best_order(), search.best_witness(), search.nodes());
}

AlternationResult alternation_number(const Hypergraph& h, int p, const AlternationOptions& options) {
  require_order(p);
  check_size(h, options);
  const int n = h.vertex_count();
  if (options.threads <= 1 || n < 3) return alternation_number_serial(h, p, options);

  // Split on the first two positions; every task keeps its own lexicographic
  // incumbent and the fold picks the smallest value, then the earliest task.
  const auto lower = lower_twins(h);
  std::vector<std::vector<int>> prefixes;
  for (int a = 1; a <= n; ++a) {
    if (!OrderingSearch::can_place(lower, 0, a)) continue;
    for (int b = 1; b <= n; ++b)
      if (OrderingSearch::can_place(lower, vertex_bit(a), b)) prefixes.push_back({a, b});
  }

  struct TaskResult {
    int value = std::numeric_limits<int>::max();
    std::vector<int> order;
    std::vector<std::uint8_t> witness;
    std::uint64_t nodes = 0;
    bool expired = false;
  };
  std::vector<TaskResult> results(prefixes.size());
  // Any ordering bounds the optimum; the identity respects the twin rule.
  std::atomic<int> shared_best{alt_with_ordering(h, p, VertexOrdering::identity(n)).value};

  const int task_count = static_cast<int>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(options.threads)
  for (int t = 0; t < task_count; ++t) {
    OrderingSearch search(h, p, options.budget, &shared_best);
    search.run(prefixes[static_cast<std::size_t>(t)]);
    auto& r = results[static_cast<std::size_t>(t)];
    r.nodes = search.nodes();
    r.expired = search.expired();
    if (search.best() != std::numeric_limits<int>::max()) {
      r.value = search.best();
      r.order = search.best_order();
      r.witness = search.best_witness();
      int seen = shared_best.load();
      while (r.value < seen && !shared_best.compare_exchange_weak(seen, r.value)) {
      }
    }
  }

  std::uint64_t nodes = 0;
  const TaskResult* winner = nullptr;
  for (const auto& r : results) {
    nodes += r.nodes;
    if (r.expired) throw BudgetExceeded("alternation search exceeded its budget");
    if (!r.order.empty() && (winner == nullptr || r.value < winner->value)) winner = &r;
  }
  if (winner == nullptr) throw std::logic_error("alternation search produced no ordering");
  return finish(h, p, winner->value, winner->order, winner->witness, nodes);
}

}  // namespace kkit
