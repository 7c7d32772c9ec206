#include "blancmange/dyadic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace blancmange {

namespace {

unsigned trailing_zeros(int128 v) {
  auto u = static_cast<uint128>(v);
  const auto lo = static_cast<std::uint64_t>(u);
  if (lo != 0) return static_cast<unsigned>(std::countr_zero(lo));
  return 64u + static_cast<unsigned>(std::countr_zero(static_cast<std::uint64_t>(u >> 64)));
}

int128 checked_shl(int128 v, unsigned s) {
  if (v == 0) return 0;
  if (s >= 127) throw std::range_error("dyadic numerator overflow");
  const int128 shifted = static_cast<int128>(static_cast<uint128>(v) << s);
  if ((shifted >> s) != v) throw std::range_error("dyadic numerator overflow");
  return shifted;
}

// Brings both numerators to the larger exponent.
struct Aligned {
  int128 a;
  int128 b;
  unsigned exp;
};

Aligned align(const DyadicRational& a, const DyadicRational& b) {
  const unsigned e = std::max(a.exp(), b.exp());
  return {checked_shl(a.num(), e - a.exp()), checked_shl(b.num(), e - b.exp()), e};
}

}  // namespace

std::string to_string(uint128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(int128 v) {
  if (v >= 0) return to_string(static_cast<uint128>(v));
  return "-" + to_string(static_cast<uint128>(0) - static_cast<uint128>(v));
}

unsigned floor_log2(std::uint64_t n) {
  if (n == 0) throw std::domain_error("floor_log2(0) is undefined");
  return static_cast<unsigned>(std::bit_width(n)) - 1u;
}

DyadicRational::DyadicRational(int128 num, unsigned exp) : num_(num), exp_(exp) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  const unsigned tz = std::min(trailing_zeros(num_), exp_);
  num_ >>= tz;
  exp_ -= tz;
  if (exp_ > kMaxExp) throw std::range_error("dyadic exponent exceeds supported width");
}

int128 DyadicRational::to_integer() const {
  if (exp_ != 0) throw InconsistencyError("expected an integer, got " + to_string());
  return num_;
}

double DyadicRational::to_double() const {
  return std::ldexp(static_cast<double>(num_), -static_cast<int>(exp_));
}

std::string DyadicRational::to_string() const {
  if (exp_ == 0) return blancmange::to_string(num_);
  return blancmange::to_string(num_) + "/" + blancmange::to_string(uint128{1} << exp_);
}

DyadicRational DyadicRational::operator-() const {
  if (num_ == static_cast<int128>(uint128{1} << 127)) throw std::range_error("dyadic negation overflow");
  return DyadicRational(-num_, exp_);
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b) {
  const Aligned v = align(a, b);
  return v.a <=> v.b;
}

DyadicRational make_dyadic(int128 num, int exp) {
  if (exp < 0) throw std::domain_error("dyadic exponent must be non-negative");
  return DyadicRational(num, static_cast<unsigned>(exp));
}

DyadicRational dyadic_arith(const DyadicRational& a, const DyadicRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: {
      const Aligned v = align(a, b);
      int128 s;
      if (__builtin_add_overflow(v.a, v.b, &s)) throw std::range_error("dyadic addition overflow");
      return DyadicRational(s, v.exp);
    }
    case ArithOp::Sub: {
      const Aligned v = align(a, b);
      int128 s;
      if (__builtin_sub_overflow(v.a, v.b, &s)) throw std::range_error("dyadic subtraction overflow");
      return DyadicRational(s, v.exp);
    }
    case ArithOp::Mul: {
      int128 p;
      if (__builtin_mul_overflow(a.num(), b.num(), &p)) throw std::range_error("dyadic multiplication overflow");
      return DyadicRational(p, a.exp() + b.exp());
    }
    case ArithOp::Halve:
      return scale_down(a, 1);
  }
  throw std::domain_error("unknown dyadic operation");
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  return dyadic_arith(a, b, ArithOp::Add);
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
  return dyadic_arith(a, b, ArithOp::Sub);
}

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
  return dyadic_arith(a, b, ArithOp::Mul);
}

DyadicRational halve(const DyadicRational& a) { return scale_down(a, 1); }

DyadicRational scale_down(const DyadicRational& a, unsigned shift) {
  if (a.num() == 0) return a;
  if (shift > DyadicRational::kMaxExp) throw std::range_error("dyadic exponent exceeds supported width");
  return DyadicRational(a.num(), a.exp() + shift);
}

DyadicRational abs(const DyadicRational& a) { return a.num() < 0 ? -a : a; }

Decomposition decompose(std::uint64_t n) {
  if (n == 0) throw std::domain_error("decompose requires n >= 1");
  Decomposition d;
  d.n = n;
  d.k = floor_log2(n);
  d.r = n - (std::uint64_t{1} << d.k);
  d.x = DyadicRational(static_cast<int128>(d.r), d.k);
  return d;
}

unsigned rho1(std::uint64_t r) {
  if (r == 0) throw std::domain_error("rho1 requires r >= 1");
  return static_cast<unsigned>(std::countr_zero(r));
}

}  // namespace blancmange
