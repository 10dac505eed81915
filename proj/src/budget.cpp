#include "kkit/budget.hpp"

namespace kkit {

Budget Budget::milliseconds(std::int64_t ms) {
  Budget b;
  b.deadline_ = clock::now() + std::chrono::milliseconds(ms < 0 ? 0 : ms);
  return b;
}

bool Budget::expired() const {
  return deadline_.has_value() && clock::now() >= *deadline_;
}

}  // namespace kkit
