#pragma once

// Exhaustive sweep kernels. sweep_serial is the reference; sweep_parallel
// splits the index space across OpenMP threads and reduces to the smallest
// failing index, so both return identical results for the same set.

#include <cstdint>
#include <optional>
#include <string>

namespace blancmange {

// A finite, indexed family of identity instances. Implementations must be
// safe to query concurrently.
class InstanceSet {
 public:
  virtual ~InstanceSet() = default;

  virtual std::uint64_t size() const = 0;
  // False when the index violates the identity's precondition (skipped).
  virtual bool valid(std::uint64_t index) const = 0;
  // Only called on valid indices. An exception counts as a failure.
  virtual bool holds(std::uint64_t index) const = 0;
};

struct SweepResult {
  std::uint64_t checked = 0;
  std::optional<std::uint64_t> first_failure;

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

SweepResult sweep_serial(const InstanceSet& set);

// threads = 0 uses the OpenMP default.
SweepResult sweep_parallel(const InstanceSet& set, int threads = 0);

}  // namespace blancmange
