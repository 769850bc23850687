#include "isotori/congruence.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

namespace isotori::congruence {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Keeps a == uᵀ·a₀·u while applying elementary congruences.
struct CongruenceState {
  IntMatrix a;
  IntMatrix u;

  void swap_index(std::size_t i, std::size_t j) {
    if (i == j) return;
    a.swap_rows(i, j);
    a.swap_cols(i, j);
    u.swap_cols(i, j);
  }
  // basis vector e_dst becomes e_dst + c·e_src
  void add_index(std::size_t dst, std::size_t src, const Integer& c) {
    if (c == 0) return;
    a.add_col(dst, src, c);
    a.add_row(dst, src, c);
    u.add_col(dst, src, c);
  }
  void negate_index(std::size_t i) {
    a.negate_row(i);
    a.negate_col(i);
    u.negate_col(i);
  }
};

}  // namespace

AntisymmetricForm::AntisymmetricForm(RationalMatrix m) : m_(std::move(m)) {
  if (!m_.square() || m_.rows() == 0 || m_.rows() % 2 != 0)
    throw std::invalid_argument("antisymmetric form must be square of positive even dimension");
  if (!is_antisymmetric(m_)) throw std::invalid_argument("form is not antisymmetric");
  pf_ = isotori::pfaffian(m_);
  if (pf_ == 0) throw std::invalid_argument("antisymmetric form is degenerate (zero Pfaffian)");
}

DivisorChain::DivisorChain(std::vector<Integer> divisors) : d_(std::move(divisors)) {
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (d_[i] <= 0) throw std::invalid_argument("divisor chain entries must be positive");
    if (i > 0 && !mpz_divisible_p(d_[i].get_mpz_t(), d_[i - 1].get_mpz_t()))
      throw std::invalid_argument("divisor chain must satisfy d_i | d_(i+1)");
  }
}

IntMatrix standard_form(const DivisorChain& chain) {
  const std::size_t n = chain.size();
  IntMatrix m(2 * n, 2 * n);
  for (std::size_t t = 0; t < n; ++t) {
    m(2 * t, 2 * t + 1) = chain.divisors()[t];
    m(2 * t + 1, 2 * t) = -chain.divisors()[t];
  }
  return m;
}

NormalForm symplectic_divisors(const IntMatrix& input) {
  if (!input.square() || input.rows() % 2 != 0)
    throw std::invalid_argument("symplectic_divisors: matrix must be square of even dimension");
  if (!is_antisymmetric(input)) throw std::invalid_argument("symplectic_divisors: matrix is not antisymmetric");

  const std::size_t dim = input.rows();
  CongruenceState st{input, IntMatrix::identity(dim)};
  IntMatrix& a = st.a;
  std::vector<Integer> chain;

  for (std::size_t t = 0; 2 * t < dim; ++t) {
    const std::size_t p = 2 * t, q = 2 * t + 1;
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = p; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
          if (a(i, j) == 0) continue;
          if (!best || abs(a(i, j)) < abs(a(best->first, best->second))) best = {i, j};
        }
      if (!best) throw std::invalid_argument("symplectic_divisors: form is degenerate");
      st.swap_index(best->first, p);
      st.swap_index(best->second, q);
      if (a(p, q) < 0) st.negate_index(q);
      const Integer d = a(p, q);

      bool remainder = false;
      for (std::size_t k = q + 1; k < dim; ++k) {
        st.add_index(k, q, -floor_div(a(p, k), d));
        st.add_index(k, p, floor_div(a(q, k), d));
        if (a(p, k) != 0 || a(q, k) != 0) remainder = true;
      }
      if (remainder) continue;

      std::optional<std::size_t> offending;
      for (std::size_t i = q + 1; i < dim && !offending; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), d.get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      st.add_index(p, *offending, Integer(1));
    }
    chain.push_back(a(p, q));
  }

  DivisorChain divisors(std::move(chain));
  if (!(a == standard_form(divisors))) throw std::logic_error("symplectic_divisors: reduction did not reach normal form");
  return NormalForm{std::move(divisors), UnimodularMatrix(std::move(st.u))};
}

std::pair<DivisorChain, DivisorChain> scaled_divisors(const AntisymmetricForm& a, const AntisymmetricForm& b) {
  ScaledPair scaled = lcd_scale(a.matrix(), b.matrix());
  return {symplectic_divisors(scaled.first).chain, symplectic_divisors(scaled.second).chain};
}

Verdict congruent(const AntisymmetricForm& a, const AntisymmetricForm& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("congruent: forms have different dimensions");
  ScaledPair scaled = lcd_scale(a.matrix(), b.matrix());
  NormalForm na = symplectic_divisors(scaled.first);
  NormalForm nb = symplectic_divisors(scaled.second);
  if (!(na.chain == nb.chain)) return Verdict{false, std::nullopt};

  // uaᵀ·A·ua = N = ubᵀ·B·ub, hence (ua·ub⁻¹)ᵀ·A·(ua·ub⁻¹) = B.
  UnimodularMatrix w = na.u * nb.u.inverse();
  const RationalMatrix wq = to_rational(w.matrix());
  if (!(wq.transpose() * a.matrix() * wq == b.matrix()))
    throw std::logic_error("congruent: composed witness failed exact verification");
  return Verdict{true, std::move(w)};
}

namespace {

constexpr std::size_t kMaxOracleDim = 4;

using Vec = std::array<std::int64_t, kMaxOracleDim>;

std::int64_t det_small(const std::array<Vec, kMaxOracleDim>& cols, std::size_t n) {
  // Laplace expansion along the first column; n ≤ 4.
  if (n == 1) return cols[0][0];
  std::int64_t det = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (cols[0][r] == 0) continue;
    std::array<Vec, kMaxOracleDim> minor{};
    for (std::size_t c = 1; c < n; ++c) {
      std::size_t rr = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == r) continue;
        minor[c - 1][rr++] = cols[c][k];
      }
    }
    const std::int64_t sub = det_small(minor, n - 1);
    det += (r % 2 == 0 ? 1 : -1) * cols[0][r] * sub;
  }
  return det;
}

std::int64_t to_small(const Integer& z) {
  if (abs(z) > 1000000) throw std::invalid_argument("bruteforce_congruent: entries too large for the oracle");
  return z.get_si();
}

}  // namespace

Verdict bruteforce_congruent(const IntMatrix& a, const IntMatrix& b, long bound) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw std::invalid_argument("bruteforce_congruent: matrices must be square of equal size");
  if (!is_antisymmetric(a) || !is_antisymmetric(b))
    throw std::invalid_argument("bruteforce_congruent: matrices must be antisymmetric");
  if (bound < 0) throw std::invalid_argument("bruteforce_congruent: bound must be nonnegative");
  const std::size_t n = a.rows();
  if (n == 0 || n > kMaxOracleDim)
    throw std::invalid_argument("bruteforce_congruent: dimension exceeds the oracle budget; use congruent()");
  double candidates = 1;
  for (std::size_t k = 0; k < n * n; ++k) candidates *= static_cast<double>(2 * bound + 1);
  if (candidates > 1e9)
    throw std::invalid_argument("bruteforce_congruent: (2*bound+1)^(dim^2) exceeds 1e9 candidates; use congruent()");

  std::int64_t A[kMaxOracleDim][kMaxOracleDim] = {};
  std::int64_t B[kMaxOracleDim][kMaxOracleDim] = {};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      A[i][j] = to_small(a(i, j));
      B[i][j] = to_small(b(i, j));
    }

  // All columns in lexicographic order, paired with A·v.
  std::vector<std::pair<Vec, Vec>> column_set;
  {
    Vec v{};
    for (std::size_t k = 0; k < n; ++k) v[k] = -bound;
    for (;;) {
      Vec av{};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) av[i] += A[i][k] * v[k];
      column_set.emplace_back(v, av);
      std::size_t pos = n;
      while (pos > 0 && v[pos - 1] == bound) v[--pos] = -bound;
      if (pos == 0) break;
      ++v[pos - 1];
    }
  }

  std::array<Vec, kMaxOracleDim> cols{};
  std::function<bool(std::size_t)> place = [&](std::size_t j) -> bool {
    for (const auto& [v, av] : column_set) {
      bool ok = true;
      // (u_iᵀ·A·v) must equal B[i][j] for every earlier column i.
      for (std::size_t i = 0; i < j && ok; ++i) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < n; ++k) s += cols[i][k] * av[k];
        ok = s == B[i][j];
      }
      if (!ok) continue;
      cols[j] = v;
      if (j + 1 == n) {
        const std::int64_t det = det_small(cols, n);
        if (det == 1 || det == -1) return true;
      } else if (place(j + 1)) {
        return true;
      }
    }
    return false;
  };

  if (!place(0)) return Verdict{false, std::nullopt};
  IntMatrix u(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) u(i, j) = static_cast<long>(cols[j][i]);
  return Verdict{true, UnimodularMatrix(std::move(u))};
}

}  // namespace isotori::congruence
