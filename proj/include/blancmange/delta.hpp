#pragma once

// delta(n): the number of D-nodes (interior nodes with unequal subtrees) in
// the divide-and-conquer tree on n leaves, computed from n alone.
//
// All functions accept 1 <= n <= kMaxN and throw std::domain_error for n = 0,
// std::range_error above kMaxN.

#include <cstdint>

#include "blancmange/dyadic.hpp"

namespace blancmange {

// Walks the binary expansion from the top bit carrying (delta(m), delta(m+1)):
//   delta(2m) = 2 delta(m),  delta(2m+1) = delta(m) + delta(m+1) + 1.
std::uint64_t delta_recursive(std::uint64_t n);

// Number of D-nodes at depth i: (n mod 2^i) if bit i of n is 0, else
// 2^i - (n mod 2^i). Requires n >= 2 and i < floor(log2 n).
std::uint64_t lambda_level(std::uint64_t n, unsigned i);

// Sum of lambda_level over the levels.
std::uint64_t delta_closed_levels(std::uint64_t n);
// Same sum written as n_i 2^i + (-1)^{n_i} (n mod 2^i).
std::uint64_t delta_closed_signed(std::uint64_t n);
// Evaluates both and throws InconsistencyError if they differ.
std::uint64_t delta_closed(std::uint64_t n);

// sum_{i<k} 2^i n_i [(k - i) - 2 w_i + 4] where w_i is the weight of bits i..k.
// The suffix variant accumulates w_i bit by bit; the popcount variant uses
// s1(n >> i).
std::uint64_t delta_explicit_suffix(std::uint64_t n);
std::uint64_t delta_explicit_popcount(std::uint64_t n);
// Evaluates both and throws InconsistencyError if they differ.
std::uint64_t delta_explicit(std::uint64_t n);

// floor(log2 n) - 2 s1(n) + 2, which equals delta(n+1) - delta(n).
std::int64_t delta_step(std::uint64_t n);

struct NeighborIdentity {
  DyadicRational lhs;
  DyadicRational rhs;
  bool holds = false;
};

// lhs = delta(n), rhs = (delta(n-1) + delta(n+1))/2 + 1 - rho1(r) for
// n = 2^k + r. Throws std::domain_error when r = 0.
NeighborIdentity check_neighbor_identity(std::uint64_t n);

}  // namespace blancmange
