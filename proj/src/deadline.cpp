#include "rootrel/deadline.hpp"

#include "rootrel/errors.hpp"

namespace rootrel {

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> current_deadline;
}

DeadlineScope::DeadlineScope(std::optional<std::chrono::steady_clock::duration> budget)
    : previous_(current_deadline) {
  if (budget) {
    auto when = std::chrono::steady_clock::now() + *budget;
    if (!current_deadline || when < *current_deadline) current_deadline = when;
  }
}

DeadlineScope::~DeadlineScope() { current_deadline = previous_; }

void check_deadline() {
  if (current_deadline && std::chrono::steady_clock::now() > *current_deadline) throw Timeout();
}

}  // namespace rootrel
