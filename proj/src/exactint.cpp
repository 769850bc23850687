#include "isotori/exactint.hpp"

#include <optional>

namespace isotori {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

struct Echelon {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};

// Column operations only; u accumulates them so that h == m * u.
Echelon column_echelon(const IntMatrix& m) {
  Echelon e{m, IntMatrix::identity(m.cols()), 0};
  IntMatrix& h = e.h;
  IntMatrix& u = e.u;
  const std::size_t ncols = m.cols();
  std::size_t col = 0;
  for (std::size_t row = 0; row < m.rows() && col < ncols; ++row) {
    bool have_pivot = false;
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t j = col; j < ncols; ++j) {
        if (h(row, j) == 0) continue;
        if (!best || abs(h(row, j)) < abs(h(row, *best))) best = j;
      }
      if (!best) break;
      have_pivot = true;
      h.swap_cols(col, *best);
      u.swap_cols(col, *best);
      bool remainder = false;
      for (std::size_t j = col + 1; j < ncols; ++j) {
        if (h(row, j) == 0) continue;
        Integer q = -floor_div(h(row, j), h(row, col));
        h.add_col(j, col, q);
        u.add_col(j, col, q);
        if (h(row, j) != 0) remainder = true;
      }
      if (!remainder) break;
    }
    if (!have_pivot) continue;
    if (h(row, col) < 0) {
      h.negate_col(col);
      u.negate_col(col);
    }
    for (std::size_t j = 0; j < col; ++j) {
      Integer q = -floor_div(h(row, j), h(row, col));
      if (q == 0) continue;
      h.add_col(j, col, q);
      u.add_col(j, col, q);
    }
    ++col;
  }
  e.rank = col;
  return e;
}

}  // namespace

UnimodularMatrix::UnimodularMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.square()) throw std::invalid_argument("unimodular matrix must be square");
  Integer d = determinant(m_);
  if (d == 1)
    det_ = 1;
  else if (d == -1)
    det_ = -1;
  else
    throw std::invalid_argument("matrix is not unimodular (det = " + to_string(d) + ")");
}

UnimodularMatrix UnimodularMatrix::identity(std::size_t n) { return UnimodularMatrix(IntMatrix::identity(n), 1); }

UnimodularMatrix UnimodularMatrix::inverse() const {
  return UnimodularMatrix(to_integer(isotori::inverse(to_rational(m_))), det_);
}

UnimodularMatrix UnimodularMatrix::transpose() const { return UnimodularMatrix(m_.transpose(), det_); }

UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b) {
  return UnimodularMatrix(a.m_ * b.m_, a.det_ * b.det_);
}

HnfResult hnf(const IntMatrix& m) {
  Echelon e = column_echelon(m);
  if (e.rank != m.cols()) throw std::domain_error("hnf: degenerate lattice (matrix is rank deficient)");
  return HnfResult{std::move(e.h), UnimodularMatrix(std::move(e.u))};
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  Echelon e = column_echelon(generators);
  return e.h.block(0, 0, e.h.rows(), e.rank);
}

SnfResult snf(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    bool empty = false;
    for (;;) {
      // Pivot: smallest nonzero |entry|, ties broken by lowest (row, col).
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          if (!best || abs(s(i, j)) < abs(s(best->first, best->second))) best = {i, j};
        }
      if (!best) {
        empty = true;
        break;
      }
      s.swap_rows(t, best->first);
      u.swap_rows(t, best->first);
      s.swap_cols(t, best->second);
      v.swap_cols(t, best->second);

      bool remainder = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = -floor_div(s(i, t), s(t, t));
        s.add_row(i, t, q);
        u.add_row(i, t, q);
        if (s(i, t) != 0) remainder = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = -floor_div(s(t, j), s(t, t));
        s.add_col(j, t, q);
        v.add_col(j, t, q);
        if (s(t, j) != 0) remainder = true;
      }
      if (remainder) continue;

      // Divisibility: pull an offending row into the pivot row and retry.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < rows && !offending; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      s.add_row(t, *offending, Integer(1));
      u.add_row(t, *offending, Integer(1));
    }
    if (empty) break;
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return SnfResult{std::move(s), UnimodularMatrix(std::move(u)), UnimodularMatrix(std::move(v))};
}

Rational pfaffian(const RationalMatrix& m) {
  if (!m.square() || m.rows() % 2 != 0) throw std::invalid_argument("pfaffian: matrix must be square of even dimension");
  if (!is_antisymmetric(m)) throw std::invalid_argument("pfaffian: matrix is not antisymmetric");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational pf = 1;
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t j = k + 1;
    while (j < n && a(k, j) == 0) ++j;
    if (j == n) return 0;
    if (j != k + 1) {
      a.swap_rows(j, k + 1);
      a.swap_cols(j, k + 1);
      pf = -pf;
    }
    const Rational p = a(k, k + 1);
    pf *= p;
    // Congruence operations with unit determinant clear rows k and k+1.
    for (std::size_t i = k + 2; i < n; ++i) {
      if (a(k, i) != 0) {
        Rational c = -a(k, i) / p;
        a.add_col(i, k + 1, c);
        a.add_row(i, k + 1, c);
      }
      if (a(k + 1, i) != 0) {
        Rational c = -a(k + 1, i) / a(k + 1, k);
        a.add_col(i, k, c);
        a.add_row(i, k, c);
      }
    }
  }
  return pf;
}

Integer common_denominator(const RationalMatrix& m) {
  Integer c = 1;
  for (const auto& x : m.data()) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), x.get_den_mpz_t());
  return c;
}

ScaledPair lcd_scale(const RationalMatrix& a, const RationalMatrix& b) {
  Integer c = common_denominator(a);
  Integer cb = common_denominator(b);
  mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
  const Rational scale(c);
  return ScaledPair{to_integer(scale * a), to_integer(scale * b), c};
}

}  // namespace isotori
