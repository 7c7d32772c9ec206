#pragma once

// Hamming weight s1(n) and the cumulative digit sum S1(n) = sum_{i<n} s1(i),
// each through every route the identities provide.
//
// Routes through tau or delta(n + 1) accept 1 <= n < 2^62 and throw
// std::range_error for n = 2^62.

#include <cstdint>
#include <vector>

#include "blancmange/dyadic.hpp"

namespace blancmange {

unsigned s1(std::uint64_t n);

// 2^(k-1) [tau(r/2^k) - tau((r+1)/2^k)] + (k+2)/2 in exact arithmetic.
unsigned s1_from_takagi(std::uint64_t n);

// (delta(n) - delta(n+1) + floor(log2 n)) / 2 + 1, with the halving checked.
unsigned s1_from_delta(std::uint64_t n);

// Literal summation, linear in n.
int128 cumsum_direct(std::uint64_t n);

// cumsum_direct(n) for every n in [lo, hi], summed once left to right.
std::vector<std::uint64_t> cumsum_direct_table(std::uint64_t lo, std::uint64_t hi);

// k 2^(k-1), the cumulative sum up to n = 2^k.
int128 cumsum_powtwo(unsigned k);

struct CumsumForms {
  int128 a = 0;  // [nk + 2^k (2x - tau(x))] / 2
  int128 b = 0;  // (nk + 2r - 2^k tau(r/2^k)) / 2
  int128 c = 0;  // (nk + 2r - delta(n)) / 2
};

// Each numerator is checked to be an even integer before halving; a failure
// throws InconsistencyError.
CumsumForms cumsum_forms(std::uint64_t n);

// n log2(n) / 2 + 2^(k-1) [2x - tau(x) - (1+x) log2(1+x)] in double
// precision, tau(x) taken exactly.
double cumsum_trollope(std::uint64_t n);

}  // namespace blancmange
