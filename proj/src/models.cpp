#include "knotoid/models.hpp"

#include <cassert>
#include <stdexcept>

namespace knotoid {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  assert(cols == o.rows);
  Matrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  assert(rows == o.rows && cols == o.cols);
  Matrix r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  assert(rows == o.rows && cols == o.cols);
  Matrix r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
  return r;
}

Matrix Matrix::operator*(const LaurentPoly& s) const {
  Matrix r = *this;
  for (auto& x : r.a) x = x * s;
  return r;
}

LaurentPoly Matrix::trace() const {
  assert(rows == cols);
  LaurentPoly t;
  for (int i = 0; i < rows; ++i) t += at(i, i);
  return t;
}

std::string Matrix::str() const {
  std::string s;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j) s += "  ";
      s += at(i, j).str();
    }
    s += '\n';
  }
  return s;
}

Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix r(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      if (x.at(i, j).is_zero()) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l)
          r.at(i * y.rows + k, j * y.cols + l) = x.at(i, j) * y.at(k, l);
    }
  return r;
}

namespace {

LaurentPoly Apow(int e2, CycScalar c = CycScalar::one()) {
  return LaurentPoly::mono(Var::A, e2, c);
}
LaurentPoly Qpow(int e2, CycScalar c = CycScalar::one()) {
  return LaurentPoly::mono(Var::Q, e2, c);
}

// Synthesize the matrix of a crossing whose strands are not both ascending by
// bending one strand across an extremum pair.  See QuantumModel::finalize.
Matrix bend_back_strand(const QuantumModel& m, const Matrix& inner) {
  // Target: "/" keeps its direction, "\" runs downward.  The "\" strand is
  // rerouted: top-left port descends through a right-up cup, crosses as the
  // inner "/" strand, then a left-up cap returns it to the bottom-right port.
  const int N = m.N;
  Matrix out(N * N, N * N);
  for (int y0 = 0; y0 < N; ++y0)
    for (int y1 = 0; y1 < N; ++y1)
      for (int x0 = 0; x0 < N; ++x0)
        for (int x1 = 0; x1 < N; ++x1) {
          LaurentPoly sum;
          for (int c2 = 0; c2 < N; ++c2)
            for (int o2 = 0; o2 < N; ++o2) {
              const LaurentPoly& cu = m.cup[kRightUp].at(y0, c2);
              if (cu.is_zero()) continue;
              const LaurentPoly& mid = inner.at(y1 * N + o2, c2 * N + x0);
              if (mid.is_zero()) continue;
              const LaurentPoly& ca = m.cap[kLeftUp].at(o2, x1);
              if (ca.is_zero()) continue;
              sum += cu * mid * ca;
            }
          out.at(y0 * N + y1, x0 * N + x1) = sum;
        }
  return out;
}

Matrix bend_slash_strand(const QuantumModel& m, const Matrix& inner) {
  // Target: "\" keeps its direction, "/" runs downward.  The "/" strand is
  // rerouted: top-right port descends through a left-up cup, crosses as the
  // inner "\" strand, then a right-up cap returns it to the bottom-left port.
  const int N = m.N;
  Matrix out(N * N, N * N);
  for (int y0 = 0; y0 < N; ++y0)
    for (int y1 = 0; y1 < N; ++y1)
      for (int x0 = 0; x0 < N; ++x0)
        for (int x1 = 0; x1 < N; ++x1) {
          LaurentPoly sum;
          for (int c1 = 0; c1 < N; ++c1)
            for (int o1 = 0; o1 < N; ++o1) {
              const LaurentPoly& cu = m.cup[kLeftUp].at(c1, y1);
              if (cu.is_zero()) continue;
              const LaurentPoly& mid = inner.at(o1 * N + y0, x1 * N + c1);
              if (mid.is_zero()) continue;
              const LaurentPoly& ca = m.cap[kRightUp].at(x0, o1);
              if (ca.is_zero()) continue;
              sum += cu * mid * ca;
            }
          out.at(y0 * N + y1, x0 * N + x1) = sum;
        }
  return out;
}

}  // namespace

void QuantumModel::finalize() {
  const int U = int(Dir::Up), D = int(Dir::Down);
  for (int k = 0; k < 2; ++k) {
    const Matrix& base = k == 0 ? rpos : rneg;
    const Matrix& obase = k == 0 ? rneg : rpos;
    cross[k][U][U] = base;
    if (!oriented) {
      cross[k][U][D] = cross[k][D][U] = cross[k][D][D] = base;
      continue;
    }
    // Bending a strand swaps over and under from the inner crossing's view.
    cross[k][U][D] = bend_back_strand(*this, obase);
    cross[k][D][U] = bend_slash_strand(*this, obase);
  }
  if (oriented)
    for (int k = 0; k < 2; ++k)
      cross[k][D][D] = bend_back_strand(*this, cross[k == 0 ? 1 : 0][U][D]);
}

QuantumModel bracket_model() {
  QuantumModel m;
  m.name = "bracket";
  m.N = 2;
  m.oriented = false;
  const CycScalar i = CycScalar::i_pow(1);
  Matrix pair(2, 2);
  pair.at(0, 1) = Apow(2, i);         // i A
  pair.at(1, 0) = Apow(-2, -i);       // -i A^-1
  m.cup[0] = m.cup[1] = pair;
  m.cap[0] = m.cap[1] = pair;
  // R = A * id + A^-1 * (cup then cap), Rbar with A inverted.
  auto build = [&](int e2) {
    Matrix r(4, 4);
    for (int i0 = 0; i0 < 2; ++i0)
      for (int j0 = 0; j0 < 2; ++j0)
        for (int k0 = 0; k0 < 2; ++k0)
          for (int l0 = 0; l0 < 2; ++l0) {
            LaurentPoly v;
            if (i0 == k0 && j0 == l0) v += Apow(e2);
            v += Apow(-e2) * pair.at(i0, j0) * pair.at(k0, l0);
            r.at(i0 * 2 + j0, k0 * 2 + l0) = v;
          }
    return r;
  };
  m.rpos = build(2);
  m.rneg = build(-2);
  m.finalize();
  return m;
}

QuantumModel binary_model() {
  QuantumModel m;
  m.name = "binary";
  m.N = 2;
  m.oriented = false;
  m.cup[0] = m.cup[1] = Matrix::identity(2);
  m.cap[0] = m.cap[1] = Matrix::identity(2);
  // Colors flip at every passage: equal pairs map to the flipped pair with
  // weight A^-1, unequal pairs stay with weight A (inverted for rneg).
  auto build = [&](int e2) {
    Matrix r(4, 4);
    r.at(3, 0) = Apow(-e2);
    r.at(0, 3) = Apow(-e2);
    r.at(1, 1) = Apow(e2);
    r.at(2, 2) = Apow(e2);
    return r;
  };
  m.rpos = build(2);
  m.rneg = build(-2);
  m.finalize();
  return m;
}

namespace {

// Shared two-label oriented scaffolding: labels {+1, -1}, mu = i, extrema
// diag(mu^(+-v/2)) by chirality.
void init_two_label_oriented(QuantumModel* m) {
  m->N = 2;
  m->oriented = true;
  m->label_value = {1, -1};
  m->mu_half = LaurentPoly::constant(CycScalar::zeta_pow(1));  // sqrt(i)
  for (int ch = 0; ch < 2; ++ch) {
    Matrix e(2, 2);
    for (int a = 0; a < 2; ++a) {
      const int v = m->label_value[a];
      e.at(a, a) = LaurentPoly::constant(
          CycScalar::zeta_pow(ch == kRightUp ? v : -v));
    }
    m->cup[ch] = e;
    m->cap[ch] = e;
  }
}

}  // namespace

QuantumModel alexander_model() {
  QuantumModel m;
  m.name = "alexander";
  init_two_label_oriented(&m);
  // basis order ++, +-, -+, --; rows are outputs.  The sweep operators are
  // the negated inverses of the skein-expansion coefficient matrices: this is
  // the sign under which a positive curl scales the sweep by -qi (a negative
  // one by q^-1*i) and the Conway identity holds with +(q - q^-1).
  m.rpos = Matrix(4, 4);
  m.rpos.at(0, 0) = -Qpow(-2);
  m.rpos.at(1, 2) = -LaurentPoly::one();
  m.rpos.at(2, 1) = -LaurentPoly::one();
  m.rpos.at(2, 2) = Qpow(2) - Qpow(-2);
  m.rpos.at(3, 3) = Qpow(2);
  m.rneg = Matrix(4, 4);
  m.rneg.at(0, 0) = -Qpow(2);
  m.rneg.at(1, 1) = Qpow(-2) - Qpow(2);
  m.rneg.at(1, 2) = -LaurentPoly::one();
  m.rneg.at(2, 1) = -LaurentPoly::one();
  m.rneg.at(3, 3) = Qpow(-2);
  m.finalize();
  return m;
}

QuantumModel sawollek_model() {
  QuantumModel m;
  m.name = "sawollek";
  init_two_label_oriented(&m);
  // Generalized Burau form in s, t; then s = sigma^2, t = tau^-2 and the
  // overall factors sigma^-1 tau (rpos) and sigma tau^-1 (rneg).
  auto S = [](int e2) { return LaurentPoly::mono(Var::S, e2); };
  auto T = [](int e2) { return LaurentPoly::mono(Var::T, e2); };
  Matrix pre(4, 4);
  pre.at(0, 0) = LaurentPoly::one();
  pre.at(1, 1) = LaurentPoly::one() - S(2) * T(2);
  pre.at(1, 2) = S(2);
  pre.at(2, 1) = T(2);
  pre.at(3, 3) = -(S(2) * T(2));
  Matrix ipre(4, 4);
  ipre.at(0, 0) = LaurentPoly::one();
  ipre.at(1, 2) = T(-2);
  ipre.at(2, 1) = S(-2);
  ipre.at(2, 2) = LaurentPoly::one() - S(-2) * T(-2);
  ipre.at(3, 3) = -(S(-2) * T(-2));
  auto substitute = [&](const Matrix& x) {
    Matrix r = x;
    for (auto& p : r.a)
      p = p.subst_monomial(Var::S, S(4)).subst_monomial(Var::T, T(-4));
    return r;
  };
  m.rpos = substitute(pre) * (S(-2) * T(2));
  m.rneg = substitute(ipre) * (S(2) * T(-2));
  m.finalize();
  return m;
}

QuantumModel homflypt_model(int n) {
  if (n < 1) throw std::invalid_argument("homflypt order must be >= 1");
  QuantumModel m;
  m.name = "homflypt:" + std::to_string(n);
  m.N = n + 1;
  m.oriented = true;
  m.label_value.resize(m.N);
  for (int i = 0; i < m.N; ++i) m.label_value[i] = n - 2 * i;
  m.mu_half = Qpow(1);  // mu = q
  // Downward edges carry the negated component label, so extrema pair a with
  // -a and weigh the pairing by q^(v/2) of the right label; both chiralities
  // then agree entrywise.
  Matrix e(m.N, m.N);
  for (int a = 0; a < m.N; ++a)
    for (int b = 0; b < m.N; ++b)
      if (m.label_value[a] == -m.label_value[b]) e.at(a, b) = Qpow(m.label_value[b]);
  m.cup[0] = m.cup[1] = e;
  m.cap[0] = m.cap[1] = e;

  const LaurentPoly dq = Qpow(2) - Qpow(-2);
  m.rpos = Matrix(m.N * m.N, m.N * m.N);
  m.rneg = Matrix(m.N * m.N, m.N * m.N);
  for (int i = 0; i < m.N; ++i)
    for (int j = 0; j < m.N; ++j) {
      const int in = i * m.N + j;
      if (i == j) {
        m.rpos.at(in, in) += Qpow(2);
        m.rneg.at(in, in) += Qpow(-2);
      } else {
        m.rpos.at(j * m.N + i, in) += LaurentPoly::one();
        m.rneg.at(j * m.N + i, in) += LaurentPoly::one();
        if (m.label_value[i] > m.label_value[j]) m.rpos.at(in, in) += dq;
        if (m.label_value[i] < m.label_value[j]) m.rneg.at(in, in) -= dq;
      }
    }
  m.finalize();
  return m;
}

bool model_by_id(const std::string& id, QuantumModel* out, std::string* err) {
  try {
    if (id == "bracket")
      *out = bracket_model();
    else if (id == "binary")
      *out = binary_model();
    else if (id == "alexander")
      *out = alexander_model();
    else if (id == "sawollek")
      *out = sawollek_model();
    else if (id.rfind("homflypt:", 0) == 0) {
      const int n = std::stoi(id.substr(9));
      *out = homflypt_model(n);
    } else {
      if (err) *err = "unknown model '" + id + "'";
      return false;
    }
  } catch (const std::exception& e) {
    if (err) *err = e.what();
    return false;
  }
  return true;
}

}  // namespace knotoid
