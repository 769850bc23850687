#pragma once

#include "isotori/matrix.hpp"

namespace isotori {

/// Square integer matrix with determinant ±1, checked on construction.
class UnimodularMatrix {
 public:
  explicit UnimodularMatrix(IntMatrix m);
  static UnimodularMatrix identity(std::size_t n);

  const IntMatrix& matrix() const { return m_; }
  std::size_t size() const { return m_.rows(); }
  int det() const { return det_; }
  UnimodularMatrix inverse() const;
  UnimodularMatrix transpose() const;

  friend UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b);
  bool operator==(const UnimodularMatrix& o) const { return m_ == o.m_; }

 private:
  UnimodularMatrix(IntMatrix m, int det) : m_(std::move(m)), det_(det) {}

  IntMatrix m_;
  int det_ = 1;
};

struct HnfResult {
  IntMatrix h;        // h == m * u
  UnimodularMatrix u;
};

/*
 * Column-style Hermite normal form of a full-column-rank integer matrix.
 *
 * H = M·U spans the same column lattice as M. Column j of H has its leading
 * (topmost) nonzero entry positive in pivot row r_j, with r_0 < r_1 < ...;
 * in each pivot row the entries of earlier columns lie in [0, pivot). For a
 * square nonsingular M this is the lower-triangular canonical basis.
 *
 * Throws std::domain_error when M is rank deficient.
 */
HnfResult hnf(const IntMatrix& m);

/// Canonical basis (HNF columns) of the lattice spanned by arbitrary integer
/// generators; zero columns are dropped. Two generator sets span the same
/// lattice iff their lattice_basis results are equal.
IntMatrix lattice_basis(const IntMatrix& generators);

struct SnfResult {
  IntMatrix s;  // s == u * m * v, diagonal, d_1 | d_2 | ..., d_i >= 0
  UnimodularMatrix u;
  UnimodularMatrix v;
};

SnfResult snf(const IntMatrix& m);

/// Pfaffian of an even-dimensional antisymmetric rational matrix; Pf² = det.
/// Throws std::invalid_argument on odd dimension or non-antisymmetric input.
Rational pfaffian(const RationalMatrix& a);

struct ScaledPair {
  IntMatrix first;
  IntMatrix second;
  Integer scale;  // least common denominator over both inputs
};

/// Multiplies both matrices by the least common denominator of all their entries.
ScaledPair lcd_scale(const RationalMatrix& a, const RationalMatrix& b);

/// Least common denominator of the entries of a single matrix.
Integer common_denominator(const RationalMatrix& m);

}  // namespace isotori
