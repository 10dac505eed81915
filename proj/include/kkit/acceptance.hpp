#ifndef KKIT_ACCEPTANCE_HPP
#define KKIT_ACCEPTANCE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kkit::acceptance {

struct Outcome {
  int id = 0;
  std::string name;
  bool passed = false;
  // Explicitly set when a search ran out of budget and the criterion fell
  // back to its degraded form.
  bool degraded = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct Options {
  int threads = 1;
  std::uint64_t seed = 20240601;
  // Only criteria whose id is listed; empty means all.
  std::vector<int> only;
  // Overrides every wall-clock limit (tests of the harness itself).
  double limit_scale = 1.0;
};

// Runs the criteria in id order, reporting each one as soon as it finishes.
std::vector<Outcome> run(const Options& options, const std::function<void(const Outcome&)>& on_result = {});

std::string format_line(const Outcome& o);

}  // namespace kkit::acceptance

#endif  // KKIT_ACCEPTANCE_HPP
