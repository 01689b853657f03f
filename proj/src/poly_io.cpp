// Canonical text form for polynomials and its parser.  print and parse are
// mutual inverses on every value the library produces.
//
//   poly    := ['-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := INT ['/' pow2]                  rational coefficient
//            | 'w' ['^' INT] ['/' pow2]        eighth root of unity w
//            | '(' combo ')' ['/' pow2]        mixed cyclotomic coefficient
//            | VAR ['^' sint ['/' '2']]        variable power, halves allowed
//   combo   := ['-'] cpart (('+'|'-') cpart)*
//   cpart   := INT ['*' 'w' ['^' INT]] | 'w' ['^' INT]
//   pow2    := INT ['^' INT]
//   VAR     := 'A' | 'q' | 's' | 't' | 'l'
//
// After 'VAR^' the whole "n/2" is the (half-integer) exponent; coefficients
// are always printed before the variable part, so there is no ambiguity.

#include <cctype>
#include <cstdint>
#include <string>

#include "knotoid/poly.hpp"

namespace knotoid {

namespace {

std::string exp_str(int e2) {
  if (e2 % 2 == 0) return std::to_string(e2 / 2);
  return std::to_string(e2) + "/2";
}

std::string mono_str(const Expt& e) {
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += kVarNames[i];
    if (e[i] != 2) s += "^" + exp_str(e[i]);
  }
  return s;
}

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  std::string err;

  explicit Lexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  bool integer(std::int64_t* out) {
    skip_ws();
    size_t p = pos;
    bool neg = false;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) {
      neg = s[p] == '-';
      ++p;
    }
    if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p]))) return false;
    std::int64_t v = 0;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      v = v * 10 + (s[p] - '0');
      ++p;
    }
    pos = p;
    *out = neg ? -v : v;
    return true;
  }
  bool digits_only(std::int64_t* out) {  // unsigned integer
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    std::int64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    *out = v;
    return true;
  }
};

int var_index(char c) {
  for (int i = 0; i < kNumVars; ++i)
    if (kVarNames[i] == c) return i;
  return -1;
}

// '/' pow2 suffix; returns exponent of 2 (0 when absent).
bool parse_pow2(Lexer& lx, std::uint32_t* out) {
  *out = 0;
  if (!lx.eat('/')) return true;
  std::int64_t base;
  if (!lx.digits_only(&base) || base != 2) {
    lx.err = "expected power-of-two denominator";
    return false;
  }
  std::int64_t e = 1;
  if (lx.eat('^') && !lx.digits_only(&e)) {
    lx.err = "expected denominator exponent";
    return false;
  }
  *out = std::uint32_t(e);
  return true;
}

// 'w' ['^' INT]  (the caller has consumed nothing).
bool parse_wpow(Lexer& lx, int* zexp) {
  if (!lx.eat('w')) return false;
  std::int64_t e = 1;
  if (lx.eat('^') && !lx.integer(&e)) {
    lx.err = "expected root-of-unity exponent";
    return false;
  }
  *zexp = int(e % 8);
  return true;
}

bool parse_combo(Lexer& lx, CycScalar* out) {
  CycScalar acc;
  bool first = true;
  while (true) {
    int sign = 1;
    if (lx.eat('-'))
      sign = -1;
    else if (lx.eat('+'))
      sign = 1;
    else if (!first)
      break;
    std::int64_t n = 1;
    bool have_n = lx.digits_only(&n);
    int zexp = 0;
    if (have_n) {
      if (lx.eat('*')) {
        if (!parse_wpow(lx, &zexp)) {
          lx.err = "expected w after *";
          return false;
        }
      }
    } else {
      if (!parse_wpow(lx, &zexp)) {
        if (first) return false;
        lx.err = "expected combo part";
        return false;
      }
    }
    acc += CycScalar::zeta_pow(zexp) * CycScalar(sign * n);
    first = false;
    if (lx.peek() != '+' && lx.peek() != '-') break;
  }
  *out = acc;
  return true;
}

// One '*'-joined factor; multiplies it into (coef, expt).
bool parse_factor(Lexer& lx, CycScalar* coef, Expt* expt) {
  const char c = lx.peek();
  if (c == '(') {
    lx.eat('(');
    CycScalar inner;
    if (!parse_combo(lx, &inner)) {
      if (lx.err.empty()) lx.err = "bad parenthesized coefficient";
      return false;
    }
    if (!lx.eat(')')) {
      lx.err = "expected )";
      return false;
    }
    std::uint32_t h;
    if (!parse_pow2(lx, &h)) return false;
    inner.half += h;
    inner.normalize();
    *coef *= inner;
    return true;
  }
  if (c == 'w') {
    int zexp;
    if (!parse_wpow(lx, &zexp)) return false;
    std::uint32_t h;
    if (!parse_pow2(lx, &h)) return false;
    CycScalar v = CycScalar::zeta_pow(zexp);
    v.half += h;
    v.normalize();
    *coef *= v;
    return true;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::int64_t n;
    lx.digits_only(&n);
    std::uint32_t h;
    if (!parse_pow2(lx, &h)) return false;
    *coef *= CycScalar::dyadic(n, h);
    return true;
  }
  const int vi = var_index(c);
  if (vi >= 0) {
    ++lx.pos;
    std::int64_t num = 1;
    bool half = false;
    if (lx.eat('^')) {
      if (!lx.integer(&num)) {
        lx.err = "expected exponent";
        return false;
      }
      if (lx.eat('/')) {
        std::int64_t den;
        if (!lx.digits_only(&den) || den != 2) {
          lx.err = "only /2 exponents are supported";
          return false;
        }
        half = true;
      }
    }
    const std::int64_t e2 = half ? num : 2 * num;
    if (e2 < INT16_MIN || e2 > INT16_MAX) {
      lx.err = "exponent out of range";
      return false;
    }
    (*expt)[vi] = std::int16_t((*expt)[vi] + e2);
    return true;
  }
  lx.err = std::string("unexpected character '") + c + "'";
  return false;
}

bool parse_term(Lexer& lx, LaurentPoly* acc, int sign) {
  CycScalar coef = CycScalar(sign);
  Expt expt{};
  if (!parse_factor(lx, &coef, &expt)) return false;
  while (lx.eat('*')) {
    if (!parse_factor(lx, &coef, &expt)) return false;
  }
  acc->add_term(expt, coef);
  return true;
}

}  // namespace

std::string LaurentPoly::str() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const std::string mono = mono_str(e);
    std::string cs = c.str();
    bool neg = false;
    if (!cs.empty() && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    std::string body;
    if (mono.empty())
      body = cs;
    else if (cs == "1")
      body = mono;
    else
      body = cs + "*" + mono;
    if (first)
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? "-" : "+") + body;
    first = false;
  }
  return out;
}

bool parse_poly(const std::string& text, LaurentPoly* out, std::string* err) {
  Lexer lx(text);
  LaurentPoly acc;
  if (lx.peek() == '\0') {
    if (err) *err = "empty input";
    return false;
  }
  if (lx.peek() == '0') {
    size_t save = lx.pos;
    ++lx.pos;
    if (lx.peek() == '\0') {
      *out = LaurentPoly::zero();
      return true;
    }
    lx.pos = save;
  }
  int sign = 1;
  if (lx.eat('-')) sign = -1;
  if (!parse_term(lx, &acc, sign)) {
    if (err) *err = lx.err.empty() ? "syntax error" : lx.err;
    return false;
  }
  while (true) {
    const char c = lx.peek();
    if (c == '+' || c == '-') {
      ++lx.pos;
      if (!parse_term(lx, &acc, c == '-' ? -1 : 1)) {
        if (err) *err = lx.err.empty() ? "syntax error" : lx.err;
        return false;
      }
      continue;
    }
    break;
  }
  if (lx.peek() != '\0') {
    if (err) *err = "trailing input at position " + std::to_string(lx.pos);
    return false;
  }
  *out = acc;
  return true;
}

}  // namespace knotoid
