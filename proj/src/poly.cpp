#include "knotoid/poly.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace knotoid {

namespace {

// Galois conjugate zeta -> zeta^k (k odd).
CycScalar apply_sigma(const CycScalar& x, int k) {
  CycScalar r;
  r.half = x.half;
  for (int i = 0; i < 4; ++i) {
    if (x.c[i] == 0) continue;
    CycScalar u = CycScalar::zeta_pow(i * k);
    for (int j = 0; j < 4; ++j) r.c[j] += x.c[i] * u.c[j];
  }
  r.normalize();
  return r;
}

// Exact division in Z[zeta][1/2]: out = a / b when the quotient stays in the
// ring (odd part of the rationalized denominator must divide the numerator).
bool divide_exact(const CycScalar& a, const CycScalar& b, CycScalar* out) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    *out = CycScalar::zero();
    return true;
  }
  CycScalar m = apply_sigma(b, 3) * apply_sigma(b, 5) * apply_sigma(b, 7);
  CycScalar norm = b * m;  // rational: components 1..3 vanish
  assert(norm.c[1] == 0 && norm.c[2] == 0 && norm.c[3] == 0);
  std::int64_t n0 = norm.c[0];
  assert(n0 != 0);
  const bool neg = n0 < 0;
  if (neg) n0 = -n0;
  std::uint32_t v = 0;
  while (n0 % 2 == 0) {
    n0 /= 2;
    ++v;
  }
  CycScalar num = a * m;
  CycScalar r;
  for (int i = 0; i < 4; ++i) {
    if (num.c[i] % n0 != 0) return false;
    r.c[i] = num.c[i] / n0 * (neg ? -1 : 1);
  }
  // value = r / 2^(num.half + v - norm.half)
  std::int64_t h = std::int64_t(num.half) + v - std::int64_t(norm.half);
  if (h >= 0) {
    r.half = std::uint32_t(h);
  } else {
    const std::int64_t scale = std::int64_t(1) << (-h);
    for (auto& x : r.c) x *= scale;
    r.half = 0;
  }
  r.normalize();
  *out = r;
  return true;
}

Expt add_expt(const Expt& a, const Expt& b) {
  Expt r;
  for (int i = 0; i < kNumVars; ++i) {
    const int v = int(a[i]) + int(b[i]);
    assert(v >= INT16_MIN && v <= INT16_MAX);
    r[i] = std::int16_t(v);
  }
  return r;
}

Expt sub_expt(const Expt& a, const Expt& b) {
  Expt r;
  for (int i = 0; i < kNumVars; ++i) {
    const int v = int(a[i]) - int(b[i]);
    assert(v >= INT16_MIN && v <= INT16_MAX);
    r[i] = std::int16_t(v);
  }
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const CycScalar& c) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms.emplace(Expt{}, c);
  return p;
}

LaurentPoly LaurentPoly::mono(Var v, int e2, const CycScalar& c) {
  Expt e{};
  assert(e2 >= INT16_MIN && e2 <= INT16_MAX);
  e[int(v)] = std::int16_t(e2);
  return mono(e, c);
}

LaurentPoly LaurentPoly::mono(const Expt& e, const CycScalar& c) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms.emplace(e, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms.empty()) return true;
  return terms.size() == 1 && terms.begin()->first == Expt{};
}

bool LaurentPoly::single_term(Expt* e, CycScalar* c) const {
  if (terms.size() != 1) return false;
  if (e) *e = terms.begin()->first;
  if (c) *c = terms.begin()->second;
  return true;
}

void LaurentPoly::add_term(const Expt& e, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [ea, ca] : terms)
    for (const auto& [eb, cb] : o.terms) r.add_term(add_expt(ea, eb), ca * cb);
  return r;
}

LaurentPoly LaurentPoly::operator*(const CycScalar& c) const {
  LaurentPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms) r.add_term(e, x * c);
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k == 0) return one();
  if (k < 0) {
    Expt e;
    CycScalar c;
    if (!single_term(&e, &c))
      throw std::domain_error("pow: negative power of a non-monomial");
    CycScalar cinv;
    if (!divide_exact(CycScalar::one(), c, &cinv))
      throw std::domain_error("pow: coefficient is not invertible in the ring");
    Expt einv{};
    for (int i = 0; i < kNumVars; ++i) einv[i] = std::int16_t(-e[i]);
    return mono(einv, cinv).pow(-k);
  }
  LaurentPoly base = *this, acc = one();
  while (k > 0) {
    if (k & 1) acc *= base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool LaurentPoly::exact_div(const LaurentPoly& d, LaurentPoly* q) const {
  if (d.is_zero()) return false;
  if (is_zero()) {
    *q = zero();
    return true;
  }
  // Shift both operands into ordinary (non-negative doubled exponent) range.
  Expt mn{}, md{};
  bool first = true;
  for (const auto& [e, c] : terms) {
    (void)c;
    for (int i = 0; i < kNumVars; ++i)
      mn[i] = first ? e[i] : std::min(mn[i], e[i]);
    first = false;
  }
  first = true;
  for (const auto& [e, c] : d.terms) {
    (void)c;
    for (int i = 0; i < kNumVars; ++i)
      md[i] = first ? e[i] : std::min(md[i], e[i]);
    first = false;
  }
  LaurentPoly r;
  for (const auto& [e, c] : terms) r.terms.emplace(sub_expt(e, mn), c);
  LaurentPoly dd;
  for (const auto& [e, c] : d.terms) dd.terms.emplace(sub_expt(e, md), c);

  const auto& [lde, ldc] = *dd.terms.begin();  // graded-lex leading term
  LaurentPoly quot;
  while (!r.is_zero()) {
    const auto& [lre, lrc] = *r.terms.begin();
    Expt diff;
    for (int i = 0; i < kNumVars; ++i) {
      const int v = int(lre[i]) - int(lde[i]);
      if (v < 0) return false;  // leading term not divisible: nonzero remainder
      diff[i] = std::int16_t(v);
    }
    CycScalar cq;
    if (!divide_exact(lrc, ldc, &cq)) return false;
    LaurentPoly t = mono(diff, cq);
    quot += t;
    r -= t * dd;
  }
  // Undo the shifts: num = x^mn num', den = x^md den', so q = x^(mn-md) q'.
  LaurentPoly out;
  for (const auto& [e, c] : quot.terms)
    out.terms.emplace(add_expt(e, sub_expt(mn, md)), c);
  *q = out;
  return true;
}

LaurentPoly LaurentPoly::subst_monomial(Var v, const LaurentPoly& image) const {
  Expt f{};
  CycScalar c;
  if (!image.is_zero()) {
    const bool ok = image.single_term(&f, &c);
    (void)ok;
    assert(ok && c == CycScalar::one());
  }
  LaurentPoly r;
  const int vi = int(v);
  for (const auto& [e, coef] : terms) {
    Expt ne = e;
    const int ev = e[vi];
    ne[vi] = 0;
    if (ev != 0 && image.is_zero())
      throw std::domain_error("subst: zero image of an occurring variable");
    for (int i = 0; i < kNumVars; ++i) {
      const long prod = long(ev) * long(f[i]);
      assert(prod % 2 == 0);  // half-exponent images would leave the lattice
      const long val = long(ne[i]) + prod / 2;
      assert(val >= INT16_MIN && val <= INT16_MAX);
      ne[i] = std::int16_t(val);
    }
    r.add_term(ne, coef);
  }
  return r;
}

}  // namespace knotoid
