#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "knotoid/poly.hpp"

using namespace knotoid;

namespace {
LaurentPoly A(int e2, CycScalar c = CycScalar::one()) {
  return LaurentPoly::mono(Var::A, e2, c);
}
LaurentPoly Q(int e2, CycScalar c = CycScalar::one()) {
  return LaurentPoly::mono(Var::Q, e2, c);
}
}  // namespace

TEST_CASE("eighth root of unity relations") {
  const CycScalar z = CycScalar::zeta_pow(1);
  CycScalar p = CycScalar::one();
  for (int k = 0; k < 8; ++k) {
    CHECK(p == CycScalar::zeta_pow(k));
    p *= z;
  }
  CHECK(p == CycScalar::one());                       // z^8 = 1
  CHECK(CycScalar::zeta_pow(4) == -CycScalar::one()); // z^4 = -1
  CHECK(CycScalar::i_pow(1) == CycScalar::zeta_pow(2));
  CHECK(CycScalar::i_pow(2) == -CycScalar::one());
  CHECK(CycScalar::i_pow(-1) == CycScalar::zeta_pow(6));
  // sqrt(i) * sqrt(-i) = 1 with the principal-branch powers z and z^7
  CHECK(CycScalar::zeta_pow(1) * CycScalar::zeta_pow(7) == CycScalar::one());
}

TEST_CASE("dyadic normalization") {
  CHECK(CycScalar::dyadic(2, 1) == CycScalar::one());
  CHECK(CycScalar::dyadic(4, 1) == CycScalar(2));
  CHECK(CycScalar::dyadic(1, 1) + CycScalar::dyadic(1, 1) == CycScalar::one());
  CHECK(CycScalar::dyadic(1, 2) * CycScalar(4) == CycScalar::one());
  CHECK((CycScalar::dyadic(1, 1) - CycScalar::dyadic(1, 1)).is_zero());
  CHECK((CycScalar::dyadic(1, 1) - CycScalar::dyadic(1, 1)).half == 0);
  // (1+i)/2 squared = i/2
  CycScalar h = (CycScalar::one() + CycScalar::i_pow(1)) * CycScalar::dyadic(1, 1);
  CycScalar i_half = CycScalar::i_pow(1) * CycScalar::dyadic(1, 1);
  CHECK(h * h == i_half);
}

TEST_CASE("scalar printing") {
  CHECK(CycScalar(3).str() == "3");
  CHECK(CycScalar(-3).str() == "-3");
  CHECK(CycScalar::dyadic(1, 1).str() == "1/2");
  CHECK(CycScalar::dyadic(-3, 1).str() == "-3/2");
  CHECK(CycScalar::dyadic(5, 3).str() == "5/2^3");
  CHECK(CycScalar::i_pow(1).str() == "w^2");
  CHECK(CycScalar::zeta_pow(7).str() == "-w^3");
  CHECK((CycScalar::zeta_pow(1) * CycScalar(2)).str() == "2*w");
  auto half = CycScalar::dyadic(1, 1);
  CHECK(((CycScalar::one() + CycScalar::i_pow(1)) * half).str() == "(1+w^2)/2");
  CHECK(((-CycScalar::one() + CycScalar::zeta_pow(1)) * half).str() == "-(1-w)/2");
}

TEST_CASE("zeta power recognition") {
  int k = 0;
  CHECK(CycScalar::zeta_pow(5).is_zeta_power(&k));
  CHECK(k == 5);
  CHECK(!CycScalar(2).is_zeta_power());
  CHECK(!(CycScalar::one() + CycScalar::i_pow(1)).is_zeta_power());
}

TEST_CASE("polynomial arithmetic") {
  LaurentPoly circle = A(4, CycScalar(-1)) + A(-4, CycScalar(-1));  // -A^2-A^-2
  CHECK(circle.str() == "-A^2-A^-2");
  CHECK((circle * circle).str() == "A^4+2+A^-4");
  CHECK((circle - circle).is_zero());
  CHECK(circle.pow(0) == LaurentPoly::one());
  CHECK(circle.pow(2) == circle * circle);
  CHECK((A(2) * A(-2)) == LaurentPoly::one());
  CHECK(A(2).pow(-3) == A(-6));
  // inverse of a monomial with unit coefficient 2*zeta
  LaurentPoly m = A(4, CycScalar::zeta_pow(1) * CycScalar(2));
  CHECK(m.pow(-1) * m == LaurentPoly::one());
  CHECK_THROWS(circle.pow(-1));
}

TEST_CASE("half exponents print and multiply") {
  CHECK(Q(1).str() == "q^1/2");
  CHECK(Q(-3).str() == "q^-3/2");
  CHECK((Q(1) * Q(1)) == Q(2));
  CHECK((Q(1) * Q(-3)) == Q(-2));
  CHECK(LaurentPoly::mono(Var::L, -3).str() == "l^-3/2");
  CHECK((Q(2, CycScalar::i_pow(1))).str() == "w^2*q");
}

TEST_CASE("graded order of printed terms") {
  LaurentPoly p = A(-4) + A(8) + LaurentPoly::one() + A(4, CycScalar(2));
  CHECK(p.str() == "A^4+2*A^2+1+A^-2");
  LaurentPoly mixed = Q(2) * A(2) + A(4);
  CHECK(mixed.str() == "A^2+A*q");
}

TEST_CASE("exact division") {
  LaurentPoly num = A(4) - A(-4);
  LaurentPoly den = A(2) - A(-2);
  LaurentPoly q;
  REQUIRE(num.exact_div(den, &q));
  CHECK(q == A(2) + A(-2));
  // remainder case
  LaurentPoly bad = A(4) + LaurentPoly::one();
  CHECK(!bad.exact_div(A(2) + LaurentPoly::one(), &q));
  // dyadic coefficient quotient stays exact: A / 2 = (1/2) A
  REQUIRE(A(2).exact_div(LaurentPoly::integer(2), &q));
  CHECK(q == A(2, CycScalar::dyadic(1, 1)));
  // multivariate: (q+q^-1)(q^2-1+q^-2)
  LaurentPoly oval = Q(2) + Q(-2);
  LaurentPoly f = Q(4) - LaurentPoly::one() + Q(-4);
  LaurentPoly prod = oval * f;
  REQUIRE(prod.exact_div(oval, &q));
  CHECK(q == f);
  LaurentPoly zero;
  REQUIRE(zero.exact_div(oval, &q));
  CHECK(q.is_zero());
}

TEST_CASE("monomial substitution") {
  // s -> s^2 doubles exponents
  LaurentPoly p = LaurentPoly::mono(Var::S, 2) + LaurentPoly::mono(Var::S, -4);
  LaurentPoly r = p.subst_monomial(Var::S, LaurentPoly::mono(Var::S, 4));
  CHECK(r == LaurentPoly::mono(Var::S, 4) + LaurentPoly::mono(Var::S, -8));
  // q -> t renames
  LaurentPoly pq = Q(2) + Q(-2);
  CHECK(pq.subst_monomial(Var::Q, LaurentPoly::mono(Var::T, 2)) ==
        LaurentPoly::mono(Var::T, 2) + LaurentPoly::mono(Var::T, -2));
  // s -> 1 evaluates
  LaurentPoly ps = LaurentPoly::mono(Var::S, 2) * Q(2) + Q(-2);
  CHECK(ps.subst_monomial(Var::S, LaurentPoly::one()) == Q(2) + Q(-2));
}

TEST_CASE("parse inverts print on goldens") {
  const char* samples[] = {
      "0",          "1",          "-1",         "A^2",         "-A^2-A^-2",
      "q^1/2",      "q^-3/2",     "w^2*A",      "1/2",         "-3/2",
      "(1+w^2)/2",  "-(1-w)/2*q", "A^8+1",      "2*w^3*t^-1",  "l^-3/2",
      "5/2^3*s^2",  "w/2",        "(2+w)/2^2",  "A*q^1/2*l^3", "-w^3",
  };
  for (const char* s : samples) {
    LaurentPoly p;
    std::string err;
    REQUIRE_MESSAGE(parse_poly(s, &p, &err), s << ": " << err);
    CHECK_MESSAGE(p.str() == s, "reprint of " << s << " gave " << p.str());
  }
}

TEST_CASE("parse round trip on random polynomials") {
  std::mt19937_64 rng(12345);
  const CycScalar pool[] = {
      CycScalar(1),
      CycScalar(-1),
      CycScalar(7),
      CycScalar::dyadic(1, 1),
      CycScalar::dyadic(-3, 2),
      CycScalar::i_pow(1),
      CycScalar::zeta_pow(1),
      CycScalar::zeta_pow(7),
      (CycScalar::one() + CycScalar::i_pow(1)) * CycScalar::dyadic(1, 1),
      CycScalar::zeta_pow(3) * CycScalar(2) - CycScalar(5),
  };
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly p;
    const int nterms = 1 + int(rng() % 5);
    for (int t = 0; t < nterms; ++t) {
      Expt e{};
      for (int v = 0; v < kNumVars; ++v)
        if (rng() % 3 == 0) e[v] = std::int16_t(int(rng() % 13) - 6);
      p.add_term(e, pool[rng() % (sizeof(pool) / sizeof(pool[0]))]);
    }
    LaurentPoly back;
    std::string err;
    const std::string s = p.str();
    REQUIRE_MESSAGE(parse_poly(s, &back, &err), s << ": " << err);
    CHECK_MESSAGE(back == p, "round trip failed for " << s);
  }
}

TEST_CASE("parse rejects garbage") {
  LaurentPoly p;
  std::string err;
  CHECK(!parse_poly("", &p, &err));
  CHECK(!parse_poly("A^", &p, &err));
  CHECK(!parse_poly("1/3", &p, &err));
  CHECK(!parse_poly("x+1", &p, &err));
  CHECK(!parse_poly("A^2 q", &p, &err));
  CHECK(!parse_poly("(1+w", &p, &err));
  CHECK(!parse_poly("q^1/4", &p, &err));
}
