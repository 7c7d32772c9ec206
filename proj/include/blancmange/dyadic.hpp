#pragma once

// Exact dyadic rationals num / 2^exp and the n = 2^k + r decomposition of
// positive integers.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace blancmange {

__extension__ using int128 = __int128;
__extension__ using uint128 = unsigned __int128;

// Largest n accepted by the formula routes. Everything derived from n
// (delta, S1, scaled Takagi numerators) stays inside 128 bits below this.
inline constexpr std::uint64_t kMaxN = std::uint64_t{1} << 62;

// Raised when a computed quantity contradicts a proven identity, e.g. two
// algebraic branches of one formula disagree.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string to_string(int128 v);
std::string to_string(uint128 v);

// floor(log2 n) for n >= 1.
unsigned floor_log2(std::uint64_t n);

class DyadicRational {
 public:
  // Denominators up to 2^kMaxExp are representable.
  static constexpr unsigned kMaxExp = 126;

  constexpr DyadicRational() = default;

  // Canonicalizes; throws std::range_error if the reduced exponent exceeds
  // kMaxExp.
  DyadicRational(int128 num, unsigned exp);

  static DyadicRational integer(int128 v) { return DyadicRational(v, 0); }

  int128 num() const { return num_; }
  unsigned exp() const { return exp_; }

  bool is_integer() const { return exp_ == 0; }
  // Throws InconsistencyError when the value is not an integer.
  int128 to_integer() const;
  double to_double() const;

  // "0", "3", "-5/8"; the denominator is printed as its integer value.
  std::string to_string() const;

  DyadicRational operator-() const;

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

 private:
  int128 num_ = 0;
  unsigned exp_ = 0;
};

DyadicRational make_dyadic(int128 num, int exp);

enum class ArithOp { Add, Sub, Mul, Halve };

// Exact arithmetic; overflow of the 128-bit numerator or of kMaxExp throws
// std::range_error. Halve ignores b.
DyadicRational dyadic_arith(const DyadicRational& a, const DyadicRational& b, ArithOp op);

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);
DyadicRational halve(const DyadicRational& a);
// a / 2^shift.
DyadicRational scale_down(const DyadicRational& a, unsigned shift);
DyadicRational abs(const DyadicRational& a);

// n = 2^k + r with 0 <= r < 2^k, x = r / 2^k.
struct Decomposition {
  std::uint64_t n = 1;
  unsigned k = 0;
  std::uint64_t r = 0;
  DyadicRational x;

  // n_i; zero above the top bit.
  unsigned bit(unsigned i) const { return i < 64 ? static_cast<unsigned>((n >> i) & 1u) : 0u; }
};

// Throws std::domain_error for n = 0.
Decomposition decompose(std::uint64_t n);

// Index of the least significant set bit. Throws std::domain_error for r = 0.
unsigned rho1(std::uint64_t r);

}  // namespace blancmange
