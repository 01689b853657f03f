#pragma once
// The five concrete strand models and the shared model schema.
//
// A model assigns N-dimensional label spaces to strands, matrices to cups,
// caps and crossings, and (for oriented models) an extremum weight mu.  Pair
// indices are row-major: (left,right) -> left*N + right; crossing matrices
// map the bottom pair (columns) to the top pair (rows).

#include <string>
#include <vector>

#include "knotoid/diagram.hpp"
#include "knotoid/poly.hpp"

namespace knotoid {

struct Matrix {
  int rows = 0, cols = 0;
  std::vector<LaurentPoly> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  static Matrix identity(int n);

  LaurentPoly& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const LaurentPoly& at(int r, int c) const { return a[size_t(r) * cols + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const LaurentPoly& s) const;
  bool operator==(const Matrix& o) const = default;

  LaurentPoly trace() const;
  std::string str() const;  // row-per-line, entries separated by two spaces
};

Matrix kron(const Matrix& x, const Matrix& y);

// Chirality index for extrema: which leg points up.
inline constexpr int kLeftUp = 0;
inline constexpr int kRightUp = 1;

struct QuantumModel {
  std::string name;
  int N = 2;
  bool oriented = false;
  std::vector<int> label_value;  // oriented models: physical label per index
  LaurentPoly mu_half;           // oriented models: mu^(1/2) as a monomial

  Matrix cup[2];  // cup[c].at(a, b): a = left top label, b = right top label
  Matrix cap[2];  // cap[c].at(a, b): a = left bottom, b = right bottom
  Matrix rpos, rneg;       // both strands pointing up
  Matrix cross[2][2][2];   // [kind][dir of / strand][dir of \ strand]

  const Matrix& crossing(EventKind k, Dir dslash, Dir dback) const {
    return cross[k == EventKind::CrossPos ? 0 : 1][int(dslash)][int(dback)];
  }
  const Matrix& extremum(EventKind k, int chirality) const {
    return k == EventKind::Cup ? cup[chirality] : cap[chirality];
  }

  // Fill cross[][][] from rpos/rneg; oriented models synthesize the rotated
  // crossings by bending a strand across a cup and a cap.
  void finalize();
};

QuantumModel bracket_model();
QuantumModel binary_model();
QuantumModel alexander_model();
QuantumModel sawollek_model();
QuantumModel homflypt_model(int n);  // n >= 1, label set {-n, -n+2, ..., n}

// ids: bracket | binary | alexander | sawollek | homflypt:<n>
bool model_by_id(const std::string& id, QuantumModel* out, std::string* err);

}  // namespace knotoid
