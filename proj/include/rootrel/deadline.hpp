#pragma once

#include <chrono>
#include <optional>

namespace rootrel {

// Cooperative per-thread deadline. Long-running kernels call
// check_deadline() at loop boundaries; it throws Timeout once the deadline
// installed on the current thread has passed.
class DeadlineScope {
 public:
  explicit DeadlineScope(std::optional<std::chrono::steady_clock::duration> budget);
  ~DeadlineScope();
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

void check_deadline();

}  // namespace rootrel
