#include "blancmange/sweep.hpp"

#include <omp.h>

#include <atomic>
#include <exception>
#include <limits>

namespace blancmange {

namespace {

constexpr std::uint64_t kNoFailure = std::numeric_limits<std::uint64_t>::max();

bool holds_noexcept(const InstanceSet& set, std::uint64_t index) noexcept {
  try {
    return set.holds(index);
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

SweepResult sweep_serial(const InstanceSet& set) {
  SweepResult result;
  const std::uint64_t size = set.size();
  for (std::uint64_t i = 0; i < size; ++i) {
    if (!set.valid(i)) continue;
    ++result.checked;
    if (!holds_noexcept(set, i)) {
      result.first_failure = i;
      break;
    }
  }
  return result;
}

SweepResult sweep_parallel(const InstanceSet& set, int threads) {
  const std::uint64_t size = set.size();
  const int team = threads > 0 ? threads : omp_get_max_threads();
  std::atomic<std::uint64_t> first{kNoFailure};

#pragma omp parallel for schedule(dynamic, 64) num_threads(team)
  for (std::uint64_t i = 0; i < size; ++i) {
    // Anything above a known failure cannot change the answer.
    if (i > first.load(std::memory_order_relaxed)) continue;
    if (!set.valid(i) || holds_noexcept(set, i)) continue;
    std::uint64_t seen = first.load(std::memory_order_relaxed);
    while (i < seen && !first.compare_exchange_weak(seen, i, std::memory_order_relaxed)) {
    }
  }

  SweepResult result;
  const std::uint64_t failure = first.load();
  const std::uint64_t limit = failure == kNoFailure ? size : failure + 1;
  std::uint64_t checked = 0;
#pragma omp parallel for reduction(+ : checked) schedule(static) num_threads(team)
  for (std::uint64_t i = 0; i < limit; ++i) {
    if (set.valid(i)) ++checked;
  }
  result.checked = checked;
  if (failure != kNoFailure) result.first_failure = failure;
  return result;
}

}  // namespace blancmange
