#include "blancmange/takagi.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "blancmange/delta.hpp"

namespace blancmange {

namespace {

std::uint64_t pow2(unsigned k) { return std::uint64_t{1} << k; }

std::string arg_text(std::uint64_t r, unsigned k) {
  return std::to_string(r) + "/2^" + std::to_string(k);
}

void require_k(unsigned k) {
  if (k > kMaxTakagiK) throw std::range_error("k = " + std::to_string(k) + " exceeds the supported 61");
}

// 0 <= r <= 2^k.
void require_closed_interval(std::uint64_t r, unsigned k) {
  require_k(k);
  if (r > pow2(k)) throw std::domain_error("argument " + arg_text(r, k) + " lies outside [0, 1]");
}

// 0 <= r < 2^k.
void require_half_open(std::uint64_t r, unsigned k) {
  require_k(k);
  if (r >= pow2(k)) throw std::domain_error("argument " + arg_text(r, k) + " must be below 1");
}

// 1 <= r <= 2^k - 1.
void require_interior(std::uint64_t r, unsigned k) {
  require_k(k);
  if (r == 0 || r >= pow2(k)) throw std::domain_error("argument " + arg_text(r, k) + " must lie in (0, 1)");
}

unsigned bit_of(std::uint64_t n, unsigned i) { return static_cast<unsigned>((n >> i) & 1u); }

}  // namespace

DyadicRational takagi_dilation(std::uint64_t r, unsigned k) {
  require_closed_interval(r, k);
  return DyadicRational(delta_closed(pow2(k) + r), k);
}

DyadicRational takagi_definition(std::uint64_t n, unsigned k) {
  require_k(k);
  if (n >> (k + 1) != 0) {
    throw std::domain_error("n = " + std::to_string(n) + " needs more than k + 1 = " + std::to_string(k + 1) +
                            " bits");
  }
  // digit(i) is b_{i+1} = n_{k-i}; all sums are scaled by 2^(k+1).
  auto digit = [&](unsigned i) { return i <= k ? bit_of(n, k - i) : 0u; };
  int128 scaled = 0;
  unsigned ones_before = 0;
  for (unsigned i = 0; i <= k; ++i) {
    const unsigned count = digit(i) == 0 ? ones_before : i - ones_before;
    scaled += static_cast<int128>(count) << (k - i);
    ones_before += digit(i);
  }
  scaled += std::popcount(n);
  return DyadicRational(scaled, k + 1);
}

DyadicRational takagi_definition_at(std::uint64_t r, unsigned k) {
  require_closed_interval(r, k);
  if (k == 0 || r == pow2(k)) return DyadicRational{};
  return takagi_definition(r, k - 1);
}

DyadicRational takagi_closed(std::uint64_t r, unsigned k) {
  require_closed_interval(r, k);
  const std::uint64_t n = pow2(k) + r;
  int128 by_case = 0;
  for (unsigned i = 0; i < k; ++i) {
    const auto residue = static_cast<int128>(n & (pow2(i) - 1));
    by_case += bit_of(n, i) == 0 ? residue : (int128{1} << i) - residue;
  }
  // Signed form n_i 2^i + (-1)^{n_i} residue.
  int128 by_sign = 0;
  for (unsigned i = 0; i < k; ++i) {
    const int128 bit = bit_of(n, i);
    const auto residue = static_cast<int128>(n & (pow2(i) - 1));
    by_sign += bit * (int128{1} << i) + (bit == 0 ? 1 : -1) * residue;
  }
  if (by_case != by_sign) throw InconsistencyError("closed Takagi forms disagree at " + arg_text(r, k));
  return DyadicRational(by_case, k);
}

DyadicRational takagi_explicit(std::uint64_t r, unsigned k) {
  require_closed_interval(r, k);
  const std::uint64_t n = pow2(k) + r;
  // Suffix weight w_i counts bits i..k of n; for r = 2^k bit k itself is 0.
  int128 suffix = bit_of(n, k);
  int128 by_suffix = 0;
  for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
    const auto ui = static_cast<unsigned>(i);
    suffix += bit_of(n, ui);
    by_suffix += int128{bit_of(n, ui)} * (int128{1} << ui) * (static_cast<int128>(k - ui) - 2 * suffix + 4);
  }
  int128 by_popcount = 0;
  for (unsigned i = 0; i < k; ++i) {
    if (bit_of(n, i) == 0) continue;
    // Bits above k never occur except for r = 2^k, where bit i < k is 0.
    const int128 weight = std::popcount(n >> i);
    by_popcount += (int128{1} << i) * (static_cast<int128>(k - i) - 2 * weight + 4);
  }
  if (by_suffix != by_popcount) throw InconsistencyError("explicit Takagi forms disagree at " + arg_text(r, k));
  return DyadicRational(by_suffix, k);
}

DyadicRational takagi_step(std::uint64_t r, unsigned k) {
  require_half_open(r, k);
  const std::uint64_t n = pow2(k) + r;
  const int128 increment = static_cast<int128>(k) - 2 * std::popcount(n) + 2;
  return takagi_dilation(r, k) + DyadicRational(increment, k);
}

DyadicRational tent_series(const DyadicRational& x) {
  if (x < DyadicRational{} || x > DyadicRational::integer(1)) {
    throw std::domain_error("tent series argument " + x.to_string() + " lies outside [0, 1]");
  }
  const unsigned m = x.exp();
  const int128 a = x.num();
  // Term i is dist(a / 2^(m-i), Z) / 2^i = min(f, 2^(m-i) - f) / 2^m with
  // f = a mod 2^(m-i).
  int128 scaled = 0;
  for (unsigned i = 0; i < m; ++i) {
    const int128 period = int128{1} << (m - i);
    const int128 f = a & (period - 1);
    scaled += std::min(f, period - f);
  }
  return DyadicRational(scaled, m);
}

TakagiNeighbor check_takagi_neighbor(std::uint64_t r, unsigned k) {
  require_interior(r, k);
  TakagiNeighbor result;
  result.lhs = takagi_dilation(r, k);
  const DyadicRational around = takagi_dilation(r - 1, k) + takagi_dilation(r + 1, k);
  result.rhs = halve(around) + DyadicRational(1 - static_cast<int128>(rho1(r)), k);
  result.holds = result.lhs == result.rhs;
  return result;
}

BorosCheck boros_check(std::uint64_t r, unsigned k) {
  require_interior(r, k);
  const DyadicRational x(static_cast<int128>(r - 1), k);
  const DyadicRational y(static_cast<int128>(r + 1), k);
  BorosCheck result;
  result.lhs = tent_series(halve(x + y));
  result.rhs = halve(tent_series(x) + tent_series(y)) + halve(abs(x - y));
  result.strict = result.lhs < result.rhs;
  return result;
}

std::string_view route_name(TakagiRoute route) {
  switch (route) {
    case TakagiRoute::Dilation:
      return "dilation";
    case TakagiRoute::Definition:
      return "definition";
    case TakagiRoute::Closed:
      return "closed";
    case TakagiRoute::Explicit:
      return "explicit";
    case TakagiRoute::Tent:
      return "tent";
  }
  return "unknown";
}

DyadicRational takagi(TakagiRoute route, std::uint64_t r, unsigned k) {
  switch (route) {
    case TakagiRoute::Dilation:
      return takagi_dilation(r, k);
    case TakagiRoute::Definition:
      return takagi_definition_at(r, k);
    case TakagiRoute::Closed:
      return takagi_closed(r, k);
    case TakagiRoute::Explicit:
      return takagi_explicit(r, k);
    case TakagiRoute::Tent:
      require_closed_interval(r, k);
      return tent_series(DyadicRational(static_cast<int128>(r), k));
  }
  throw std::domain_error("unknown Takagi route");
}

}  // namespace blancmange
