#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

namespace crn {

/// Stop conditions shared by the threads of one enumeration.
struct Budget {
  using Clock = std::chrono::steady_clock;

  std::optional<Clock::time_point> deadline;
  std::optional<std::uint64_t> max_results;
  std::atomic<bool> stopped{false};
  std::atomic<std::uint64_t> emitted{0};

  Budget(std::optional<std::chrono::milliseconds> time_budget, std::optional<std::uint64_t> cap) : max_results(cap)
  {
    if (time_budget) deadline = Clock::now() + *time_budget;
  }

  bool stop() const { return stopped.load(std::memory_order_relaxed); }

  void tick(std::uint64_t nodes)
  {
    if (deadline && (nodes & 0x3ff) == 0 && Clock::now() > *deadline) stopped = true;
  }

  /// False once the result cap is exceeded.
  bool admit()
  {
    if (!max_results) return true;
    if (++emitted > *max_results) {
      stopped = true;
      return false;
    }
    return true;
  }
};

}  // namespace crn
