#include <doctest.h>

#include <array>
#include <stdexcept>

#include "blancmange/delta.hpp"
#include "blancmange/digitsum.hpp"
#include "oracle.hpp"

using namespace blancmange;

namespace {

std::uint64_t p2(unsigned k) { return std::uint64_t{1} << k; }

}  // namespace

TEST_CASE("delta of the first sixteen integers") {
  constexpr std::array<std::uint64_t, 16> expected = {0, 0, 1, 0, 2, 2, 2, 0, 3, 4, 5, 4, 5, 4, 3, 0};
  for (std::uint64_t n = 1; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(oracle::delta(n) == expected[n - 1]);
    CHECK(delta_recursive(n) == expected[n - 1]);
    CHECK(delta_closed(n) == expected[n - 1]);
    CHECK(delta_explicit(n) == expected[n - 1]);
  }
}

TEST_CASE("explicit form example: delta(23) = 10") {
  CHECK(delta_explicit(23) == 10);
  CHECK(oracle::delta(23) == 10);
}

TEST_CASE("lambda_level examples and preconditions") {
  CHECK(lambda_level(5, 0) == 1);
  CHECK(lambda_level(5, 1) == 1);
  CHECK(lambda_level(6, 0) == 0);
  CHECK(lambda_level(6, 1) == 2);
  CHECK_THROWS_AS(lambda_level(1, 0), std::domain_error);
  CHECK_THROWS_AS(lambda_level(6, 2), std::domain_error);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(delta_recursive(0), std::domain_error);
  CHECK_THROWS_AS(delta_closed(0), std::domain_error);
  CHECK_THROWS_AS(delta_explicit(0), std::domain_error);
  CHECK_THROWS_AS(delta_recursive(kMaxN + 1), std::range_error);
  CHECK_THROWS_AS(delta_closed(kMaxN + 1), std::range_error);
  CHECK_THROWS_AS(check_neighbor_identity(8), std::domain_error);
  CHECK_NOTHROW(delta_closed(kMaxN));
  CHECK(delta_explicit(kMaxN) == 0);
}

TEST_CASE("every formula and variant matches the leaf-split oracle") {
  for (std::uint64_t n = 1; n <= 4096; ++n) {
    const std::uint64_t want = oracle::delta(n);
    REQUIRE(delta_recursive(n) == want);
    REQUIRE(delta_closed_levels(n) == want);
    REQUIRE(delta_closed_signed(n) == want);
    REQUIRE(delta_explicit_suffix(n) == want);
    REQUIRE(delta_explicit_popcount(n) == want);
    for (unsigned i = 0; n >= 2 && i < floor_log2(n); ++i) REQUIRE(lambda_level(n, i) == oracle::delta_at_depth(n, i));
  }
}

TEST_CASE("property: random large n") {
  for (int trial = 0; trial < 3000; ++trial) {
    const std::uint64_t n = oracle::uniform(2, kMaxN / 2 - 1);
    CAPTURE(n);
    const std::uint64_t d = delta_recursive(n);
    // Formulas agree far outside the oracle's reach.
    REQUIRE(delta_closed(n) == d);
    REQUIRE(delta_explicit(n) == d);
    // Doubling and odd split.
    REQUIRE(delta_recursive(2 * n) == 2 * d);
    REQUIRE(delta_recursive(2 * n + 1) == d + delta_recursive(n + 1) + 1);
    // Step.
    REQUIRE(static_cast<std::int64_t>(delta_recursive(n + 1)) - static_cast<std::int64_t>(d) == delta_step(n));
    // Symmetry about the middle of the octave.
    const unsigned k = floor_log2(n);
    const std::uint64_t r = n - p2(k);
    REQUIRE(delta_recursive(p2(k + 1) - r) == d);
    // The D-count is bounded by the S+D count.
    REQUIRE(d <= n - 1);
  }
}

TEST_CASE("step recurrence over a prefix") {
  for (std::uint64_t n = 1; n < 20000; ++n) {
    const auto lhs = static_cast<std::int64_t>(oracle::delta(n + 1)) - static_cast<std::int64_t>(oracle::delta(n));
    REQUIRE(delta_step(n) == lhs);
  }
}

TEST_CASE("lambda difference for odd r") {
  for (std::uint64_t n = 3; n < 20000; ++n) {
    const unsigned k = floor_log2(n);
    const std::uint64_t r = n - p2(k);
    if (r % 2 == 0) continue;
    for (unsigned i = 1; i < k; ++i) {
      const auto diff = static_cast<std::int64_t>(lambda_level(n, i)) - static_cast<std::int64_t>(lambda_level(n - 1, i));
      REQUIRE(diff == (((n >> i) & 1u) == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("neighbor corollary examples") {
  const NeighborIdentity five = check_neighbor_identity(5);
  CHECK(five.holds);
  CHECK(five.lhs == DyadicRational::integer(2));

  // delta(6) = 2 = (2 + 2)/2 + 1 - 1
  const NeighborIdentity six = check_neighbor_identity(6);
  CHECK(six.holds);
  CHECK(six.rhs == DyadicRational::integer(2));

  // delta(12) = 4 = (5 + 5)/2 + 1 - 2
  const NeighborIdentity twelve = check_neighbor_identity(12);
  CHECK(twelve.holds);
  CHECK(twelve.lhs == DyadicRational::integer(4));
  CHECK(twelve.rhs == DyadicRational::integer(4));

  for (std::uint64_t n = 3; n < 50000; ++n) {
    if ((n & (n - 1)) == 0) continue;
    REQUIRE(check_neighbor_identity(n).holds);
  }
}
