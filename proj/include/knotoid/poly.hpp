#pragma once
// Laurent polynomials with CycScalar coefficients over the fixed variable set
//   A  (Kauffman bracket variable)
//   q  (oriented-model variable)
//   s, t  (two-variable oriented model, printed as sigma/tau stand-ins)
//   l  (open-component marker of the rotational bracket)
// Exponents are half-integers, stored doubled (x^(e2/2) for int e2), which is
// what extremum weights like q^(1/2) and open-arc markers like l^(-3/2) need.

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "knotoid/cyc.hpp"

namespace knotoid {

enum class Var : int { A = 0, Q = 1, S = 2, T = 3, L = 4 };
inline constexpr int kNumVars = 5;
inline constexpr char kVarNames[kNumVars] = {'A', 'q', 's', 't', 'l'};

using Expt = std::array<std::int16_t, kNumVars>;  // doubled exponents

// Graded-lex print order: higher total doubled degree first, ties broken by
// lexicographically larger exponent vector first.  std::map with this
// comparator iterates in print order.
struct GrlexBefore {
  bool operator()(const Expt& a, const Expt& b) const {
    int ta = 0, tb = 0;
    for (int i = 0; i < kNumVars; ++i) {
      ta += a[i];
      tb += b[i];
    }
    if (ta != tb) return ta > tb;
    return a > b;
  }
};

struct LaurentPoly {
  std::map<Expt, CycScalar, GrlexBefore> terms;

  static LaurentPoly zero() { return {}; }
  static LaurentPoly constant(const CycScalar& c);
  static LaurentPoly one() { return constant(CycScalar::one()); }
  static LaurentPoly integer(std::int64_t n) { return constant(CycScalar(n)); }
  // c * v^(e2/2)
  static LaurentPoly mono(Var v, int e2, const CycScalar& c = CycScalar::one());
  static LaurentPoly mono(const Expt& e, const CycScalar& c);

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  // If the polynomial is a single term, reports it.
  bool single_term(Expt* e = nullptr, CycScalar* c = nullptr) const;

  void add_term(const Expt& e, const CycScalar& c);  // accumulates, prunes zeros

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const CycScalar& c) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return terms == o.terms; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // p^k.  k < 0 requires a single term with coefficient (+-)zeta^j * 2^m.
  LaurentPoly pow(int k) const;

  // Exact division: sets *q with *this == d * (*q) and returns true, or
  // returns false when the division leaves a remainder.
  bool exact_div(const LaurentPoly& d, LaurentPoly* q) const;

  // Substitute v by a single-term image with coefficient 1 (e.g. s -> s^2,
  // q -> t, s -> 1).  Requires every occurrence to land on integral doubled
  // exponents.
  LaurentPoly subst_monomial(Var v, const LaurentPoly& image) const;

  std::string str() const;
};

// Parse the canonical polynomial syntax emitted by str().  Returns false on
// syntax errors (err receives a description).
bool parse_poly(const std::string& text, LaurentPoly* out, std::string* err);

}  // namespace knotoid
