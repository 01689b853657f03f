#pragma once
// Exact arithmetic in Z[zeta][1/2], zeta = primitive 8th root of unity.
//
// Elements are stored as (c0 + c1*zeta + c2*zeta^2 + c3*zeta^3) / 2^half with
// integer ci, using the relation zeta^4 = -1.  Useful constants:
//   zeta^2 = i,   zeta = sqrt(i),   zeta^7 = -zeta^3 = sqrt(-i),
// so the ring contains i and both square roots of +-i, plus exact halves.
// Values are kept normalized: either half == 0 or at least one ci is odd.

#include <array>
#include <cstdint>
#include <string>

namespace knotoid {

struct CycScalar {
  std::array<std::int64_t, 4> c{0, 0, 0, 0};
  std::uint32_t half = 0;  // denominator exponent: value = (sum ci zeta^i) / 2^half

  CycScalar() = default;
  explicit CycScalar(std::int64_t n) { c[0] = n; }

  static CycScalar zero() { return CycScalar(); }
  static CycScalar one() { return CycScalar(1); }
  // zeta^k for any integer k (k may be negative).
  static CycScalar zeta_pow(int k);
  // i^k = zeta^(2k).
  static CycScalar i_pow(int k) { return zeta_pow(2 * k); }
  // n / 2^e, normalized.
  static CycScalar dyadic(std::int64_t n, std::uint32_t e);

  bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  bool is_integer() const { return half == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

  void normalize();

  CycScalar operator-() const;
  CycScalar operator+(const CycScalar& o) const;
  CycScalar operator-(const CycScalar& o) const;
  CycScalar operator*(const CycScalar& o) const;
  CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
  CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }
  bool operator==(const CycScalar& o) const { return c == o.c && half == o.half; }
  bool operator!=(const CycScalar& o) const { return !(*this == o); }

  // True when the element is a unit of the form zeta^k or -zeta^k; reports k in
  // [0,8) with the sign folded in (i.e. value == zeta_pow(k)).
  bool is_zeta_power(int* k_out = nullptr) const;

  std::string str() const;  // canonical form used by the polynomial printer
};

}  // namespace knotoid
