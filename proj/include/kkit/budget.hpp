#ifndef KKIT_BUDGET_HPP
#define KKIT_BUDGET_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace kkit {

// Wall-clock allowance shared by the exact solvers. A default-constructed
// budget never expires. Reading it is thread-safe.
class Budget {
 public:
  using clock = std::chrono::steady_clock;

  Budget() = default;

  static Budget milliseconds(std::int64_t ms);
  static Budget unlimited() { return Budget{}; }

  bool is_unlimited() const { return !deadline_.has_value(); }
  bool expired() const;

 private:
  std::optional<clock::time_point> deadline_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Counts DFS nodes and polls the clock every 1024 of them.
class NodeMeter {
 public:
  explicit NodeMeter(const Budget& budget) : budget_(&budget) {}

  bool tick() {
    ++nodes_;
    if ((nodes_ & 1023U) == 0 && budget_->expired()) expired_ = true;
    return !expired_;
  }
  bool expired() const { return expired_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  const Budget* budget_;
  std::uint64_t nodes_ = 0;
  bool expired_ = false;
};

}  // namespace kkit

#endif  // KKIT_BUDGET_HPP
