#pragma once

// Independent reference computations and random generators shared by the
// unit tests and the acceptance driver. Nothing here calls the normal-form
// code under test.

#include <algorithm>
#include <numeric>
#include <vector>

#include "isotori/matrix.hpp"
#include "isotori/random.hpp"

namespace support {

using isotori::Integer;
using isotori::IntMatrix;
using isotori::Rational;
using isotori::RationalMatrix;

template <class T>
isotori::Matrix<T> minor_of(const isotori::Matrix<T>& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  isotori::Matrix<T> r(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = m(rows[i], cols[j]);
  return r;
}

// Cofactor expansion along the first row.
template <class T>
T det_expansion(const isotori::Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T det = 0;
  std::vector<std::size_t> rows(n - 1);
  std::iota(rows.begin(), rows.end(), 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    T sub = det_expansion(minor_of(m, rows, cols));
    det += (j % 2 == 0 ? T(1) : T(-1)) * m(0, j) * sub;
  }
  return det;
}

// Pf(A) = Σ_j (−1)^(j+1) a_{0j} Pf(A with rows/cols 0 and j removed).
inline Rational pfaffian_expansion(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Rational pf = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (a(0, j) == 0) continue;
    std::vector<std::size_t> keep;
    for (std::size_t k = 1; k < n; ++k)
      if (k != j) keep.push_back(k);
    const Rational sign = (j % 2 == 1) ? 1 : -1;
    pf += sign * a(0, j) * pfaffian_expansion(minor_of(a, keep, keep));
  }
  return pf;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k×k minors (the k-th determinantal divisor).
inline Integer minors_gcd(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  Integer g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      Integer d = det_expansion(minor_of(m, r, c));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

// Smith invariants d_k = D_k / D_{k−1} (zero once D_k vanishes).
inline std::vector<Integer> smith_invariants(const IntMatrix& m) {
  std::vector<Integer> d;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Integer dk = minors_gcd(m, k);
    if (dk == 0) {
      d.push_back(0);
      prev = 0;
      continue;
    }
    d.push_back(dk / prev);
    prev = dk;
  }
  return d;
}

// v ∈ column lattice of a square nonsingular B (Cramer's rule).
inline bool in_lattice(const RationalMatrix& b, const std::vector<Rational>& v) {
  const Rational det = det_expansion(b);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    RationalMatrix bj = b;
    for (std::size_t i = 0; i < b.rows(); ++i) bj(i, j) = v[i];
    const Rational x = det_expansion(bj) / det;
    if (x.get_den() != 1) return false;
  }
  return true;
}

inline std::vector<Rational> column(const RationalMatrix& m, std::size_t j) {
  std::vector<Rational> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

/*
 * Lattice spanned by generators g (full row rank) equals the lattice with
 * square basis b iff every generator lies in L(b) and both have the same
 * covolume; the covolume of L(g) is the gcd of the maximal minors of g after
 * clearing denominators.
 */
inline bool same_lattice_oracle(const RationalMatrix& generators, const RationalMatrix& basis) {
  for (std::size_t j = 0; j < generators.cols(); ++j)
    if (!in_lattice(basis, column(generators, j))) return false;
  Integer c = 1;
  for (const auto& x : generators.data()) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), x.get_den_mpz_t());
  const IntMatrix scaled = isotori::to_integer(Rational(c) * generators);
  const Integer covolume_scaled = minors_gcd(scaled, scaled.rows());
  Rational cn = 1;
  for (std::size_t i = 0; i < generators.rows(); ++i) cn *= c;
  return abs(det_expansion(basis)) == Rational(covolume_scaled) / cn;
}

inline IntMatrix random_unimodular(isotori::Rng& rng, std::size_t n, int steps = 12, int max_coeff = 2) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 1) {
    if (rng.coin()) u(0, 0) = -1;
    return u;
  }
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    switch (rng.uniform(0, 2)) {
      case 0: u.add_col(i, j, Integer(static_cast<long>(rng.uniform(-max_coeff, max_coeff)))); break;
      case 1: u.swap_cols(i, j); break;
      default: u.negate_col(i); break;
    }
  }
  return u;
}

inline RationalMatrix random_antisymmetric(isotori::Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = Rational(static_cast<long>(rng.uniform(lo, hi)));
      a(j, i) = -a(i, j);
    }
  return a;
}

inline std::vector<Rational> random_areas(isotori::Rng& rng, std::size_t n, std::int64_t max_num = 20, std::int64_t max_den = 20) {
  std::vector<Rational> a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(rng.positive_rational(max_num, max_den));
  return a;
}

// t = S·[[I, B], [0, D]]·S⁻¹ with D = [[0, C], [0, 0]], so D² = 0 and
// (t² − t)² = 0 while t² ≠ t in general.
inline RationalMatrix random_homotopy_idempotent(isotori::Rng& rng, std::size_t n) {
  // Leave at least two coordinates for D when possible so that D ≠ 0.
  const auto k = static_cast<std::size_t>(rng.uniform(0, std::max<std::int64_t>(0, static_cast<std::int64_t>(n) - 2)));
  const std::size_t m = n - k;
  const auto split = m < 2 ? m : static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(m) - 1));
  RationalMatrix t(n, n);
  for (std::size_t i = 0; i < k; ++i) {
    t(i, i) = 1;
    for (std::size_t j = k; j < n; ++j) t(i, j) = rng.nonzero_rational(3, 2) * (rng.coin() ? 1 : 0);
  }
  for (std::size_t i = k; i < k + split; ++i)
    for (std::size_t j = k + split; j < n; ++j) t(i, j) = rng.nonzero_rational(4, 3);
  const RationalMatrix s = isotori::to_rational(random_unimodular(rng, n, 10, 1));
  return s * t * isotori::inverse(s);
}

// Closed-form valuation pairing of the standard polarized torus:
// (α₁/l)·m₁m₁' + Σ_{i≥2} (αᵢ/l)(mᵢl + m₁)(mᵢ'l + m₁').
inline Rational closed_form_pairing(const std::vector<Rational>& a, std::int64_t l, const std::vector<Rational>& m,
                                    const std::vector<Rational>& mp) {
  const Rational lq(static_cast<long>(l));
  Rational s = a[0] / lq * m[0] * mp[0];
  for (std::size_t i = 1; i < a.size(); ++i) s += a[i] / lq * (m[i] * lq + m[0]) * (mp[i] * lq + mp[0]);
  return s;
}

inline Rational bilinear(const RationalMatrix& g, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g(i, j) * y[j];
  return s;
}

}  // namespace support
