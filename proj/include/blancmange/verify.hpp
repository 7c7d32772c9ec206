#pragma once

// Catalog of the identities this library implements and the engine that
// sweeps each one exhaustively over a range.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace blancmange {

enum class IdentityId {
  DeltaRecursiveVsClosed,
  DeltaVsTreeOracle,
  DeltaSymmetry,
  DeltaNeighbor,
  DeltaStep,
  LambdaVsLevels,
  LambdaDiff,
  TakagiFiveWay,
  TakagiNeighbor,
  TakagiStep,
  TakagiReflection,
  TakagiReduction,
  Boros,
  S1Lemmas,
  S1FromTakagi,
  S1FromDelta,
  S1ThreeForms,
  S1Powtwo,
  S1TrollopeFloat,
};

// n-ranges sweep integers n; k-ranges sweep every dyadic grid r / 2^k.
enum class RangeUnit { N, K };

struct IdentityInfo {
  IdentityId id;
  std::string_view name;      // e.g. "DELTA_SYMMETRY"
  std::string_view citation;  // the result being checked, by name and statement
  RangeUnit unit;
  std::uint64_t default_lo;
  std::uint64_t default_hi;
  std::uint64_t cap;  // largest admissible hi
};

// Stable order, one entry per IdentityId.
std::span<const IdentityInfo> list_identities();

const IdentityInfo& identity_info(IdentityId id);

// Throws std::domain_error for an unknown name.
IdentityId identity_from_name(std::string_view name);

std::string_view unit_name(RangeUnit unit);

struct InstanceFailure {
  std::string instance;  // e.g. "n=12" or "k=3 r=5"
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  IdentityId id{};
  RangeUnit unit = RangeUnit::N;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t checked = 0;
  bool passed = true;
  std::optional<InstanceFailure> first_failure;
};

enum class Execution { Serial, Parallel };

// Evaluates the identity at every valid instance of [lo, hi] (instances that
// violate its precondition are skipped) and stops at the first failure. The
// parallel kernel reports the same smallest failing instance as the serial
// one. On failure, checked counts valid instances up to and including it.
//
// Throws std::invalid_argument if lo > hi or lo = 0, std::range_error if hi
// exceeds the identity's cap, std::domain_error for an unknown id.
IdentityReport verify_range(IdentityId id, std::uint64_t lo, std::uint64_t hi,
                            Execution execution = Execution::Parallel);

// One line: "NAME n=[lo,hi] checked=C PASS" or "... FAIL at <instance> lhs=.. rhs=..".
std::string format_report(const IdentityReport& report);

}  // namespace blancmange
