#include "blancmange/delta.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace blancmange {

namespace {

void require_n(std::uint64_t n) {
  if (n == 0) throw std::domain_error("delta is defined for n >= 1");
  if (n > kMaxN) throw std::range_error("n = " + std::to_string(n) + " exceeds 2^62");
}

unsigned bit_of(std::uint64_t n, unsigned i) { return static_cast<unsigned>((n >> i) & 1u); }

std::uint64_t low_bits(std::uint64_t n, unsigned i) { return n & ((std::uint64_t{1} << i) - 1); }

std::uint64_t as_count(int128 v, const char* what) {
  if (v < 0) throw InconsistencyError(std::string(what) + " produced a negative count");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t delta_recursive(std::uint64_t n) {
  require_n(n);
  std::uint64_t at_m = 0;     // delta(1)
  std::uint64_t at_next = 0;  // delta(2)
  for (int i = static_cast<int>(floor_log2(n)) - 1; i >= 0; --i) {
    const std::uint64_t odd = at_m + at_next + 1;
    if (bit_of(n, static_cast<unsigned>(i)) == 0) {
      at_next = odd;
      at_m = 2 * at_m;
    } else {
      at_m = odd;
      at_next = 2 * at_next;
    }
  }
  return at_m;
}

std::uint64_t lambda_level(std::uint64_t n, unsigned i) {
  if (n < 2) throw std::domain_error("lambda_level requires n >= 2");
  require_n(n);
  if (i >= floor_log2(n)) {
    throw std::domain_error("level " + std::to_string(i) + " out of range for n = " + std::to_string(n));
  }
  const std::uint64_t residue = low_bits(n, i);
  return bit_of(n, i) == 0 ? residue : (std::uint64_t{1} << i) - residue;
}

std::uint64_t delta_closed_levels(std::uint64_t n) {
  require_n(n);
  std::uint64_t sum = 0;
  const unsigned k = floor_log2(n);
  for (unsigned i = 0; i < k; ++i) sum += lambda_level(n, i);
  return sum;
}

std::uint64_t delta_closed_signed(std::uint64_t n) {
  require_n(n);
  int128 sum = 0;
  const unsigned k = floor_log2(n);
  for (unsigned i = 0; i < k; ++i) {
    const int128 bit = bit_of(n, i);
    const int128 residue = static_cast<int128>(low_bits(n, i));
    sum += bit * (int128{1} << i) + (bit == 0 ? residue : -residue);
  }
  return as_count(sum, "signed closed form");
}

std::uint64_t delta_closed(std::uint64_t n) {
  const std::uint64_t levels = delta_closed_levels(n);
  const std::uint64_t signed_form = delta_closed_signed(n);
  if (levels != signed_form) {
    throw InconsistencyError("closed forms disagree at n = " + std::to_string(n));
  }
  return levels;
}

std::uint64_t delta_explicit_suffix(std::uint64_t n) {
  require_n(n);
  const unsigned k = floor_log2(n);
  // Weight of bits i..k, built from the top down.
  int128 suffix = 1;
  int128 sum = 0;
  for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
    const auto ui = static_cast<unsigned>(i);
    suffix += bit_of(n, ui);
    if (bit_of(n, ui) == 0) continue;
    sum += (int128{1} << ui) * (static_cast<int128>(k - ui) - 2 * suffix + 4);
  }
  return as_count(sum, "explicit form");
}

std::uint64_t delta_explicit_popcount(std::uint64_t n) {
  require_n(n);
  const unsigned k = floor_log2(n);
  int128 sum = 0;
  for (unsigned i = 0; i < k; ++i) {
    if (bit_of(n, i) == 0) continue;
    const int128 weight = std::popcount(n >> i);
    sum += (int128{1} << i) * (static_cast<int128>(k - i) - 2 * weight + 4);
  }
  return as_count(sum, "explicit form");
}

std::uint64_t delta_explicit(std::uint64_t n) {
  const std::uint64_t suffix = delta_explicit_suffix(n);
  const std::uint64_t popcount = delta_explicit_popcount(n);
  if (suffix != popcount) {
    throw InconsistencyError("explicit forms disagree at n = " + std::to_string(n));
  }
  return suffix;
}

std::int64_t delta_step(std::uint64_t n) {
  require_n(n);
  return static_cast<std::int64_t>(floor_log2(n)) - 2 * std::popcount(n) + 2;
}

NeighborIdentity check_neighbor_identity(std::uint64_t n) {
  require_n(n);
  const Decomposition d = decompose(n);
  if (d.r == 0) throw std::domain_error("neighbor identity requires n strictly between powers of two");

  NeighborIdentity result;
  result.lhs = DyadicRational::integer(delta_recursive(n));
  const auto around = static_cast<int128>(delta_recursive(n - 1)) + delta_recursive(n + 1);
  result.rhs = DyadicRational(around, 1) + DyadicRational::integer(1 - static_cast<int128>(rho1(d.r)));
  result.holds = result.lhs == result.rhs;
  return result;
}

}  // namespace blancmange
