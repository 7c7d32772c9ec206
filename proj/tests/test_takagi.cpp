#include <doctest.h>

#include <stdexcept>

#include "blancmange/delta.hpp"
#include "blancmange/takagi.hpp"
#include "oracle.hpp"

using namespace blancmange;

namespace {

DyadicRational d(std::int64_t num, unsigned exp) { return DyadicRational(num, exp); }

// Same value as an int64 fraction, for comparison with the oracle.
bool same(const DyadicRational& v, const oracle::Fraction& f) {
  const oracle::Fraction mine(static_cast<std::int64_t>(v.num()), std::int64_t{1} << v.exp());
  return mine == f;
}

}  // namespace

TEST_CASE("spot values through every route") {
  struct Spot {
    std::uint64_t r;
    unsigned k;
    DyadicRational value;
  };
  const Spot spots[] = {{1, 1, d(1, 1)}, {1, 2, d(1, 1)}, {1, 3, d(3, 3)}, {3, 3, d(5, 3)},
                        {0, 4, d(0, 0)}, {16, 4, d(0, 0)}, {7, 4, d(5, 3)}, {3, 2, d(1, 1)}};
  for (const Spot& spot : spots) {
    CAPTURE(spot.r);
    CAPTURE(spot.k);
    for (TakagiRoute route : kAllTakagiRoutes) {
      CAPTURE(route_name(route));
      CHECK(takagi(route, spot.r, spot.k) == spot.value);
    }
    CHECK(same(spot.value, oracle::takagi(static_cast<std::int64_t>(spot.r), spot.k)));
  }
}

TEST_CASE("definition at the native n / 2^(k+1) scale") {
  // 3/4 = 0.11 in binary
  CHECK(takagi_definition(3, 1) == d(1, 1));
  CHECK(takagi_definition(1, 0) == d(1, 1));
  CHECK(takagi_definition(0, 5) == DyadicRational{});
  CHECK_THROWS(takagi_definition(4, 1));
}

TEST_CASE("step, neighbor and Boros examples") {
  CHECK(takagi_step(7, 3) == DyadicRational{});
  CHECK(takagi_step(0, 1) == d(1, 1));

  const TakagiNeighbor neighbor = check_takagi_neighbor(1, 2);
  CHECK(neighbor.holds);
  CHECK(neighbor.lhs == d(1, 1));

  const BorosCheck boros = boros_check(4, 3);
  CHECK(boros.lhs == d(1, 1));
  CHECK(boros.rhs == d(3, 2));
  CHECK(boros.strict);

  const BorosCheck odd = boros_check(3, 3);
  CHECK(odd.lhs == odd.rhs);
  CHECK_FALSE(odd.strict);
}

TEST_CASE("tent series on reduced arguments") {
  CHECK(tent_series(d(1, 1)) == d(1, 1));
  CHECK(tent_series(d(5, 3)) == d(5, 3));
  CHECK(tent_series(DyadicRational::integer(1)) == DyadicRational{});
  CHECK_THROWS_AS(tent_series(d(-1, 1)), std::domain_error);
  CHECK_THROWS_AS(tent_series(d(3, 1)), std::domain_error);
}

TEST_CASE("argument errors") {
  CHECK_THROWS(takagi_dilation(5, 2));
  CHECK_THROWS(takagi_closed(5, 2));
  CHECK_THROWS(takagi_step(4, 2));
  CHECK_THROWS(check_takagi_neighbor(0, 3));
  CHECK_THROWS(check_takagi_neighbor(8, 3));
  CHECK_THROWS(boros_check(0, 3));
  CHECK_THROWS(takagi_dilation(0, kMaxTakagiK + 1));
}

TEST_CASE("all routes equal the oracle tent series on every grid up to 2^10") {
  for (unsigned k = 1; k <= 10; ++k) {
    for (std::uint64_t r = 0; r <= (std::uint64_t{1} << k); ++r) {
      const oracle::Fraction want = oracle::takagi(static_cast<std::int64_t>(r), k);
      for (TakagiRoute route : kAllTakagiRoutes) {
        CAPTURE(route_name(route));
        CAPTURE(r);
        CAPTURE(k);
        REQUIRE(same(takagi(route, r, k), want));
      }
    }
  }
}

TEST_CASE("property: range, symmetry and reduction at large k") {
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned k = static_cast<unsigned>(oracle::uniform(20, kMaxTakagiK - 1));
    const std::uint64_t top = std::uint64_t{1} << k;
    const std::uint64_t r = oracle::uniform(1, top - 1);
    CAPTURE(r);
    CAPTURE(k);
    const DyadicRational t = takagi_dilation(r, k);
    // 0 <= tau <= 2/3, i.e. 3 tau <= 2
    REQUIRE(t >= DyadicRational{});
    REQUIRE(t + t + t <= DyadicRational::integer(2));
    REQUIRE(takagi_closed(r, k) == t);
    REQUIRE(takagi_explicit(r, k) == t);
    REQUIRE(takagi_definition_at(r, k) == t);
    REQUIRE(takagi_dilation(2 * r, k + 1) == t);
    REQUIRE(takagi_dilation(top - r, k) == t);
    REQUIRE(check_takagi_neighbor(r, k).holds);
    const BorosCheck b = boros_check(r, k);
    REQUIRE(b.lhs <= b.rhs);
    REQUIRE(b.strict == (r % 2 == 0));
  }
}

TEST_CASE("tent series agrees with the reduced dilation value") {
  for (unsigned k = 1; k <= 40; k += 3) {
    for (int trial = 0; trial < 50; ++trial) {
      const std::uint64_t r = oracle::uniform(0, std::uint64_t{1} << k);
      REQUIRE(tent_series(DyadicRational(static_cast<int128>(r), k)) == takagi_dilation(r, k));
    }
  }
}

TEST_CASE("route names") {
  CHECK(route_name(TakagiRoute::Dilation) == "dilation");
  CHECK(route_name(TakagiRoute::Definition) == "definition");
  CHECK(route_name(TakagiRoute::Closed) == "closed");
  CHECK(route_name(TakagiRoute::Explicit) == "explicit");
  CHECK(route_name(TakagiRoute::Tent) == "tent");
}
