#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

#include "cartprod/errors.hpp"

namespace cartprod {

/// Gaussian integer with overflow-checked 64-bit components.
///
/// This is the exact scalar ring of the library: every algebraic identity
/// can be verified entrywise with no rounding. Arithmetic that would wrap
/// throws arithmetic_overflow instead.
class GaussInt {
 public:
  constexpr GaussInt() = default;
  constexpr GaussInt(std::int64_t re, std::int64_t im = 0) : re_(re), im_(im) {}

  constexpr std::int64_t re() const { return re_; }
  constexpr std::int64_t im() const { return im_; }

  GaussInt conj() const { return {re_, checked_neg(im_)}; }

  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {checked_add(a.re_, b.re_), checked_add(a.im_, b.im_)};
  }

  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {checked_sub(a.re_, b.re_), checked_sub(a.im_, b.im_)};
  }

  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
    const std::int64_t ac = checked_mul(a.re_, b.re_);
    const std::int64_t bd = checked_mul(a.im_, b.im_);
    const std::int64_t ad = checked_mul(a.re_, b.im_);
    const std::int64_t bc = checked_mul(a.im_, b.re_);
    return {checked_sub(ac, bd), checked_add(ad, bc)};
  }

  GaussInt operator-() const { return {checked_neg(re_), checked_neg(im_)}; }

  GaussInt& operator+=(const GaussInt& o) { return *this = *this + o; }
  GaussInt& operator-=(const GaussInt& o) { return *this = *this - o; }
  GaussInt& operator*=(const GaussInt& o) { return *this = *this * o; }

  friend bool operator==(const GaussInt& a, const GaussInt& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const GaussInt& v) {
    os << v.re_;
    if (v.im_ != 0) {
      os << (v.im_ < 0 ? '-' : '+') << std::abs(v.im_) << 'i';
    }
    return os;
  }

 private:
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw arithmetic_overflow("gaussian integer addition overflows int64");
    }
    return r;
  }

  static std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
      throw arithmetic_overflow("gaussian integer subtraction overflows int64");
    }
    return r;
  }

  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw arithmetic_overflow("gaussian integer multiplication overflows int64");
    }
    return r;
  }

  static std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

  std::int64_t re_ = 0;
  std::int64_t im_ = 0;
};

/// Quotient v / d when both components divide evenly, nothing otherwise.
inline std::optional<GaussInt> exact_div(const GaussInt& v, std::int64_t d) {
  if (d == 0 || v.re() % d != 0 || v.im() % d != 0) {
    return std::nullopt;
  }
  return GaussInt{v.re() / d, v.im() / d};
}

/// Complex modulus as a double; used only for tolerance scaling.
inline double abs_value(const GaussInt& v) {
  return std::hypot(static_cast<double>(v.re()), static_cast<double>(v.im()));
}

inline std::string to_string(const GaussInt& v) {
  std::string s = std::to_string(v.re());
  if (v.im() != 0) {
    s += (v.im() < 0 ? "-" : "+") + std::to_string(std::abs(v.im())) + "i";
  }
  return s;
}

}  // namespace cartprod
