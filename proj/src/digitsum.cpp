#include "blancmange/digitsum.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "blancmange/delta.hpp"
#include "blancmange/takagi.hpp"

namespace blancmange {

namespace {

void require_positive(std::uint64_t n) {
  if (n == 0) throw std::domain_error("n must be positive");
  if (n > kMaxN) throw std::range_error("n = " + std::to_string(n) + " exceeds 2^62");
}

// The Takagi routes read tau at r / 2^k, which needs k <= kMaxTakagiK; only
// n = 2^62 falls outside.
void require_below_top(std::uint64_t n, const char* what) {
  require_positive(n);
  if (n == kMaxN) throw std::range_error(std::string(what) + " supports n < 2^62");
}

unsigned as_weight(const DyadicRational& v, std::uint64_t n) {
  const int128 w = v.to_integer();
  if (w < 0 || w > 64) throw InconsistencyError("impossible weight " + v.to_string() + " for n = " + std::to_string(n));
  return static_cast<unsigned>(w);
}

int128 checked_half(const DyadicRational& twice, const char* form, std::uint64_t n) {
  if (!twice.is_integer() || (twice.num() & 1) != 0) {
    throw InconsistencyError(std::string(form) + " numerator " + twice.to_string() + " is not an even integer at n = " +
                             std::to_string(n));
  }
  return twice.num() / 2;
}

}  // namespace

unsigned s1(std::uint64_t n) { return static_cast<unsigned>(std::popcount(n)); }

unsigned s1_from_takagi(std::uint64_t n) {
  require_below_top(n, "s1_from_takagi");
  const Decomposition d = decompose(n);
  const DyadicRational drop = takagi_dilation(d.r, d.k) - takagi_dilation(d.r + 1, d.k);
  // 2^(k-1) as a dyadic, including 1/2 for k = 0.
  const DyadicRational scale(int128{1} << d.k, 1);
  const DyadicRational value = scale * drop + DyadicRational(d.k + 2, 1);
  return as_weight(value, n);
}

unsigned s1_from_delta(std::uint64_t n) {
  require_below_top(n, "s1_from_delta");
  const int128 numerator = static_cast<int128>(delta_recursive(n)) - static_cast<int128>(delta_recursive(n + 1)) +
                           floor_log2(n);
  return as_weight(DyadicRational(numerator, 1) + DyadicRational::integer(1), n);
}

int128 cumsum_direct(std::uint64_t n) {
  int128 sum = 0;
  for (std::uint64_t i = 0; i < n; ++i) sum += std::popcount(i);
  return sum;
}

std::vector<std::uint64_t> cumsum_direct_table(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty cumulative-sum range");
  std::vector<std::uint64_t> table;
  table.reserve(hi - lo + 1);
  auto running = static_cast<std::uint64_t>(cumsum_direct(lo));
  table.push_back(running);
  for (std::uint64_t n = lo; n < hi; ++n) {
    running += static_cast<std::uint64_t>(std::popcount(n));
    table.push_back(running);
  }
  return table;
}

int128 cumsum_powtwo(unsigned k) {
  if (k > 62) throw std::range_error("cumsum_powtwo supports k <= 62");
  if (k == 0) return 0;
  return static_cast<int128>(k) << (k - 1);
}

CumsumForms cumsum_forms(std::uint64_t n) {
  require_below_top(n, "cumsum_forms");
  const Decomposition d = decompose(n);
  const DyadicRational nk = DyadicRational::integer(static_cast<int128>(n) * d.k);
  const DyadicRational two_pow_k = DyadicRational::integer(int128{1} << d.k);
  const DyadicRational two_r = DyadicRational::integer(2 * static_cast<int128>(d.r));

  CumsumForms forms;
  // (a) through tau at the reduced point x itself.
  const DyadicRational tau_x = tent_series(d.x);
  forms.a = checked_half(nk + two_pow_k * (DyadicRational::integer(2) * d.x - tau_x), "form (a)", n);
  // (b) through the dilation at the unreduced r / 2^k.
  forms.b = checked_half(nk + two_r - two_pow_k * takagi_dilation(d.r, d.k), "form (b)", n);
  // (c) through the D-node count directly.
  forms.c = checked_half(nk + two_r - DyadicRational::integer(delta_recursive(n)), "form (c)", n);
  return forms;
}

double cumsum_trollope(std::uint64_t n) {
  require_below_top(n, "cumsum_trollope");
  const Decomposition d = decompose(n);
  const double nd = static_cast<double>(n);
  const double x = d.x.to_double();
  const double tau_x = takagi_dilation(d.r, d.k).to_double();
  return nd * std::log2(nd) / 2.0 + std::ldexp(2.0 * x - tau_x - (1.0 + x) * std::log2(1.0 + x), static_cast<int>(d.k) - 1);
}

}  // namespace blancmange
