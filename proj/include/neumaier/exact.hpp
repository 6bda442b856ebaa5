#pragma once

// Exact integer arithmetic used by the characteristic polynomial, polynomial
// gcd and walk-count code. Algorithms are written once over an integer type
// and first run on Checked64, which throws Overflow instead of wrapping; on
// overflow they are rerun on arbitrary-precision BigInt.

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace neumaier {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
struct Overflow {};
}  // namespace detail

class Checked64 {
 public:
  constexpr Checked64() = default;
  constexpr Checked64(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Checked64(const BigInt& v) {                     // NOLINT(google-explicit-constructor)
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      throw detail::Overflow{};
    v_ = static_cast<std::int64_t>(v);
  }

  std::int64_t value() const { return v_; }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw detail::Overflow{};
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw detail::Overflow{};
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw detail::Overflow{};
    return r;
  }
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (b.v_ == -1 && a.v_ == std::numeric_limits<std::int64_t>::min()) throw detail::Overflow{};
    return a.v_ / b.v_;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked64 operator-() const { return Checked64(0) - *this; }
  Checked64& operator+=(Checked64 o) { return *this = *this + o; }
  Checked64& operator-=(Checked64 o) { return *this = *this - o; }
  Checked64& operator*=(Checked64 o) { return *this = *this * o; }

  friend auto operator<=>(Checked64, Checked64) = default;
  friend bool operator==(Checked64, Checked64) = default;

 private:
  std::int64_t v_ = 0;
};

inline BigInt to_big(const Checked64& x) { return BigInt(x.value()); }
inline BigInt to_big(const BigInt& x) { return x; }

inline Checked64 int_abs(Checked64 x) { return x < Checked64(0) ? -x : x; }
inline BigInt int_abs(const BigInt& x) { return boost::multiprecision::abs(x); }

inline Checked64 int_gcd(Checked64 a, Checked64 b) {
  a = int_abs(a);
  b = int_abs(b);
  return std::gcd(a.value(), b.value());
}
inline BigInt int_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline bool is_zero(const Checked64& x) { return x.value() == 0; }
inline bool is_zero(const BigInt& x) { return x.is_zero(); }

inline double to_double(const Checked64& x) { return static_cast<double>(x.value()); }
inline double to_double(const BigInt& x) { return x.convert_to<double>(); }

// Runs `f.template operator()<Checked64>()`, falling back to BigInt on overflow.
template <class F>
auto with_overflow_fallback(F&& f) {
  try {
    return f.template operator()<Checked64>();
  } catch (const detail::Overflow&) {
    return f.template operator()<BigInt>();
  }
}

}  // namespace neumaier
