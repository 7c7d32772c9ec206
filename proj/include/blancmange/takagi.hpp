#pragma once

// The Takagi (blancmange) function at dyadic points, evaluated exactly by
// five independent routes.
//
// Arguments are taken as the pair (r, k) meaning r / 2^k and are never
// reduced: the formulas are indexed by that specific k, and invariance under
// (r, k) -> (2r, k+1) is something the tests check rather than assume.
// k is limited to kMaxTakagiK so that 2^k + r stays within kMaxN.

#include <array>
#include <cstdint>
#include <string_view>

#include "blancmange/dyadic.hpp"

namespace blancmange {

inline constexpr unsigned kMaxTakagiK = 61;

// delta(2^k + r) / 2^k, 0 <= r <= 2^k.
DyadicRational takagi_dilation(std::uint64_t r, unsigned k);

// Takagi's digit-count series at n / 2^(k+1), with n < 2^(k+1): for the
// binary digits b_1 b_2 ... of the argument, l_i counts the earlier digits
// that differ from b_i, and the value is sum l_i / 2^i. Digits past the
// expansion are 0, so the infinite tail closes to s1(n) / 2^(k+1).
DyadicRational takagi_definition(std::uint64_t n, unsigned k);

// Adapter to the r / 2^k convention of the other routes. k = 0 and r = 2^k
// map to the argument 0 (the series is 1-periodic).
DyadicRational takagi_definition_at(std::uint64_t r, unsigned k);

// (1 / 2^k) sum_{i<k} lambda_i(2^k + r), 0 <= r <= 2^k. Both the case form
// and the signed form are evaluated; a mismatch throws InconsistencyError.
DyadicRational takagi_closed(std::uint64_t r, unsigned k);

// (1 / 2^k) sum_{i<k} 2^i n_i [(k - i) - 2 w_i + 4], n = 2^k + r, with w_i the
// weight of bits i..k of n. Suffix-sum and popcount variants must agree.
DyadicRational takagi_explicit(std::uint64_t r, unsigned k);

// tau((r+1) / 2^k) as tau(r / 2^k) + (k - 2 s1(2^k + r) + 2) / 2^k, r < 2^k.
DyadicRational takagi_step(std::uint64_t r, unsigned k);

// Classical tent series sum_{i<m} dist(2^i x, Z) / 2^i for x = a / 2^m in [0, 1].
// Finite because every later term vanishes at a dyadic point.
DyadicRational tent_series(const DyadicRational& x);

struct TakagiNeighbor {
  DyadicRational lhs;
  DyadicRational rhs;
  bool holds = false;
};

// lhs = tau(r/2^k), rhs = [tau((r-1)/2^k) + tau((r+1)/2^k)] / 2 + (1 - rho1(r)) / 2^k.
// Requires 1 <= r <= 2^k - 1.
TakagiNeighbor check_takagi_neighbor(std::uint64_t r, unsigned k);

struct BorosCheck {
  DyadicRational lhs;
  DyadicRational rhs;
  bool strict = false;
};

// Midpoint convexity bound tau((x+y)/2) <= [tau(x) + tau(y)]/2 + |x - y|/2 at
// x = (r-1)/2^k, y = (r+1)/2^k. Requires 1 <= r <= 2^k - 1.
BorosCheck boros_check(std::uint64_t r, unsigned k);

enum class TakagiRoute { Dilation, Definition, Closed, Explicit, Tent };

inline constexpr std::array<TakagiRoute, 5> kAllTakagiRoutes = {
    TakagiRoute::Dilation, TakagiRoute::Definition, TakagiRoute::Closed, TakagiRoute::Explicit,
    TakagiRoute::Tent};

std::string_view route_name(TakagiRoute route);

// tau(r / 2^k) through the given route; 0 <= r <= 2^k.
DyadicRational takagi(TakagiRoute route, std::uint64_t r, unsigned k);

}  // namespace blancmange
