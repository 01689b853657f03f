#include "knotoid/cyc.hpp"

#include <cassert>
#include <cstdlib>

namespace knotoid {

void CycScalar::normalize() {
  if (is_zero()) {
    half = 0;
    return;
  }
  while (half > 0 && (c[0] % 2 == 0) && (c[1] % 2 == 0) && (c[2] % 2 == 0) &&
         (c[3] % 2 == 0)) {
    for (auto& x : c) x /= 2;
    --half;
  }
}

CycScalar CycScalar::zeta_pow(int k) {
  k %= 8;
  if (k < 0) k += 8;
  CycScalar r;
  if (k < 4)
    r.c[k] = 1;
  else
    r.c[k - 4] = -1;
  return r;
}

CycScalar CycScalar::dyadic(std::int64_t n, std::uint32_t e) {
  CycScalar r;
  r.c[0] = n;
  r.half = e;
  r.normalize();
  return r;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
  CycScalar r;
  r.half = half > o.half ? half : o.half;
  const std::int64_t sa = std::int64_t(1) << (r.half - half);
  const std::int64_t sb = std::int64_t(1) << (r.half - o.half);
  for (int i = 0; i < 4; ++i) r.c[i] = c[i] * sa + o.c[i] * sb;
  r.normalize();
  return r;
}

CycScalar CycScalar::operator-(const CycScalar& o) const { return *this + (-o); }

CycScalar CycScalar::operator*(const CycScalar& o) const {
  CycScalar r;
  r.half = half + o.half;
  for (int a = 0; a < 4; ++a) {
    if (c[a] == 0) continue;
    for (int b = 0; b < 4; ++b) {
      if (o.c[b] == 0) continue;
      const int idx = a + b;
      if (idx < 4)
        r.c[idx] += c[a] * o.c[b];
      else
        r.c[idx - 4] -= c[a] * o.c[b];  // zeta^4 = -1
    }
  }
  r.normalize();
  return r;
}

bool CycScalar::is_zeta_power(int* k_out) const {
  if (half != 0) return false;
  int hit = -1;
  for (int i = 0; i < 4; ++i) {
    if (c[i] == 0) continue;
    if (hit >= 0 || (c[i] != 1 && c[i] != -1)) return false;
    hit = i;
  }
  if (hit < 0) return false;
  if (k_out) *k_out = hit + (c[hit] < 0 ? 4 : 0);
  return true;
}

namespace {

// One basis component |n| * w^i without sign; n != 0.
std::string component_str(std::int64_t n, int i) {
  const std::int64_t a = std::llabs(n);
  std::string s;
  if (a != 1 || i == 0) s = std::to_string(a);
  if (i > 0) {
    if (!s.empty()) s += "*";
    s += "w";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

std::string denom_suffix(std::uint32_t half) {
  if (half == 0) return "";
  if (half == 1) return "/2";
  return "/2^" + std::to_string(half);
}

}  // namespace

std::string CycScalar::str() const {
  if (is_zero()) return "0";
  int nz = 0, first = -1;
  for (int i = 0; i < 4; ++i)
    if (c[i] != 0) {
      ++nz;
      if (first < 0) first = i;
    }
  if (nz == 1) {
    std::string s = c[first] < 0 ? "-" : "";
    const std::int64_t a = std::llabs(c[first]);
    if (first == 0 || a != 1) {
      s += std::to_string(a) + denom_suffix(half);
      if (first > 0) s += "*";
    }
    if (first > 0) {
      s += "w";
      if (first > 1) s += "^" + std::to_string(first);
      if (a == 1) s += denom_suffix(half);
    }
    return s;
  }
  // Several components: parenthesized sum, overall sign taken from the lowest
  // nonzero component so the printer can splice terms with +/-.
  const bool neg = c[first] < 0;
  std::string body;
  for (int i = 0; i < 4; ++i) {
    if (c[i] == 0) continue;
    std::int64_t v = neg ? -c[i] : c[i];
    if (body.empty())
      body += component_str(v, i);
    else
      body += (v < 0 ? "-" : "+") + component_str(v, i);
  }
  std::string s = neg ? "-(" : "(";
  s += body + ")" + denom_suffix(half);
  return s;
}

}  // namespace knotoid
