// f4.hpp — the four-element field F4 = F2[w]/(w^2+w+1).
//
// Elements are encoded as 0, 1, 2 = w, 3 = w+1 (written "w+1"; the conjugate
// of w).  Addition is XOR under this encoding; multiplication and inversion go
// through small constant tables.  The Frobenius x -> x^2 swaps w and w+1.
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace k3m {

struct F4 {
  uint8_t v = 0;

  constexpr F4() = default;
  constexpr explicit F4(uint8_t value) : v(value) {}

  static constexpr F4 zero() { return F4(0); }
  static constexpr F4 one() { return F4(1); }
  static constexpr F4 omega() { return F4(2); }
  static constexpr F4 omega_bar() { return F4(3); }

  constexpr bool is_zero() const { return v == 0; }
  constexpr bool operator==(const F4&) const = default;

  friend constexpr F4 operator+(F4 a, F4 b) { return F4(uint8_t(a.v ^ b.v)); }
  friend constexpr F4 operator-(F4 a, F4 b) { return a + b; }
  F4& operator+=(F4 b) { v ^= b.v; return *this; }

  friend constexpr F4 operator*(F4 a, F4 b) {
    // Multiplication table for the encoding 0,1,w,w+1.
    constexpr uint8_t mul[4][4] = {
        {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return F4(mul[a.v][b.v]);
  }
  F4& operator*=(F4 b) { *this = *this * b; return *this; }

  constexpr F4 inverse() const {
    if (v == 0) raise(ErrorCode::DIVISION_BY_ZERO, "inverse of 0 in F4");
    constexpr uint8_t inv[4] = {0, 1, 3, 2};
    return F4(inv[v]);
  }
  friend constexpr F4 operator/(F4 a, F4 b) { return a * b.inverse(); }

  // Frobenius x -> x^2: fixes 0 and 1, swaps w and w+1.
  constexpr F4 square() const {
    constexpr uint8_t sq[4] = {0, 1, 3, 2};
    return F4(sq[v]);
  }
  constexpr F4 conj() const { return square(); }

  std::string str() const {
    static const char* names[4] = {"0", "1", "w", "w+1"};
    return names[v];
  }
};

inline F4 parse_f4(const std::string& s) {
  if (s == "0") return F4::zero();
  if (s == "1") return F4::one();
  if (s == "w") return F4::omega();
  if (s == "w+1" || s == "1+w") return F4::omega_bar();
  raise(ErrorCode::BAD_INPUT, "cannot parse F4 scalar '" + s + "'");
}

}  // namespace k3m
