#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace finstone::detail {

struct Overflow : std::overflow_error {
  Overflow() : std::overflow_error("int64 overflow") {}
};

/// 64-bit integer that throws on overflow. Used as a fast path for exact
/// elimination; callers retry with BigInt when it throws.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const noexcept { return v_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
    if (a.v_ == std::numeric_limits<std::int64_t>::min() && b.v_ == -1) throw Overflow();
    return a.v_ / b.v_;
  }
  friend CheckedInt operator%(CheckedInt a, CheckedInt b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  CheckedInt operator-() const {
    if (v_ == std::numeric_limits<std::int64_t>::min()) throw Overflow();
    return -v_;
  }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }

  friend constexpr bool operator==(CheckedInt a, CheckedInt b) { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(CheckedInt a, CheckedInt b) { return a.v_ <=> b.v_; }
  friend constexpr bool operator==(CheckedInt a, int b) { return a.v_ == b; }

 private:
  std::int64_t v_ = 0;
};

inline CheckedInt abs(CheckedInt a) { return a < CheckedInt(0) ? -a : a; }

}  // namespace finstone::detail
