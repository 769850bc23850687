#include "isotori/analytic.hpp"

#include <algorithm>
#include <map>

namespace isotori::analytic {

NovikovScalar::NovikovScalar(std::vector<Term> terms) {
  std::map<Rational, Rational> by_exp;
  for (auto& t : terms) by_exp[t.exp] += t.coeff;
  for (auto& [e, c] : by_exp)
    if (c != 0) terms_.push_back(Term{c, e});
}

NovikovScalar NovikovScalar::monomial(const Rational& coeff, const Rational& exp) { return NovikovScalar({Term{coeff, exp}}); }

Rational NovikovScalar::valuation() const {
  if (terms_.empty()) throw std::domain_error("valuation of the zero Novikov element is undefined");
  return terms_.front().exp;
}

NovikovScalar NovikovScalar::pow(long k) const {
  if (k < 0) {
    if (terms_.size() != 1) throw std::domain_error("only monomials are invertible among finite Novikov sums");
    const Term& t = terms_.front();
    return monomial(1 / t.coeff, -t.exp).pow(-k);
  }
  NovikovScalar r = one();
  for (long i = 0; i < k; ++i) r = r * *this;
  return r;
}

NovikovScalar operator+(const NovikovScalar& a, const NovikovScalar& b) {
  std::vector<NovikovScalar::Term> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return NovikovScalar(std::move(all));
}

NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b) {
  std::vector<NovikovScalar::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.coeff * y.coeff, x.exp + y.exp});
  return NovikovScalar(std::move(prod));
}

NovikovLattice::NovikovLattice(RationalMatrix valuation_matrix) : m_(std::move(valuation_matrix)) {
  if (!m_.square() || m_.rows() == 0) throw std::invalid_argument("valuation matrix must be square and nonempty");
  if (determinant(m_) == 0) throw std::invalid_argument("valuation matrix is singular; generators do not form a lattice");
}

std::vector<NovikovScalar> NovikovLattice::generator(std::size_t j) const {
  std::vector<NovikovScalar> point;
  for (std::size_t k = 0; k < rank(); ++k) point.push_back(NovikovScalar::monomial(1, m_(k, j)));
  return point;
}

NovikovScalar evaluate_character(const std::vector<Integer>& exponents, const std::vector<NovikovScalar>& point) {
  if (exponents.size() != point.size()) throw std::invalid_argument("character and point have different ranks");
  NovikovScalar r = NovikovScalar::one();
  for (std::size_t k = 0; k < point.size(); ++k) {
    if (!exponents[k].fits_slong_p()) throw std::invalid_argument("character exponent out of range");
    r = r * point[k].pow(exponents[k].get_si());
  }
  return r;
}

AnalyticTorus standard_analytic_torus(const std::vector<Rational>& areas, std::int64_t l) {
  const std::size_t n = areas.size();
  if (n == 0) throw std::invalid_argument("need at least one area");
  if (l < 1) throw std::invalid_argument("l must be a positive integer");
  RationalMatrix m(n, n);
  IntMatrix phi(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (areas[i] <= 0) throw std::invalid_argument("areas must be positive");
    m(i, 0) = areas[i] / Rational(l);
    phi(0, i) = 1;
  }
  for (std::size_t i = 1; i < n; ++i) {
    m(i, i) = areas[i];
    phi(i, i) = l;
  }
  return AnalyticTorus{NovikovLattice(std::move(m)), Polarization{std::move(phi)}};
}

RationalMatrix gram_matrix(const AnalyticTorus& t) {
  if (!t.polarization) throw std::invalid_argument("torus has no polarization");
  const IntMatrix& phi = t.polarization->phi;
  const std::size_t n = t.lattice.rank();
  if (phi.rows() != n || phi.cols() != n) throw std::invalid_argument("polarization has the wrong shape");
  RationalMatrix g(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto point = t.lattice.generator(j);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Integer> row(n);
      for (std::size_t k = 0; k < n; ++k) row[k] = phi(i, k);
      g(i, j) = evaluate_character(row, point).valuation();
    }
  }
  return g;
}

bool is_abelian_variety(const AnalyticTorus& t) {
  const RationalMatrix g = gram_matrix(t);
  if (!(g == g.transpose())) return false;
  for (std::size_t k = 1; k <= g.rows(); ++k)
    if (determinant(g.block(0, 0, k, k)) <= 0) return false;
  return true;
}

NovikovLattice dual(const NovikovLattice& g) { return NovikovLattice(g.valuation_matrix().transpose()); }

RationalMatrix pairing_matrix(const NovikovLattice& g) {
  const std::size_t n = g.rank();
  RationalMatrix q(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto point = g.generator(j);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Integer> coordinate(n);
      coordinate[i] = 1;
      q(i, j) = evaluate_character(coordinate, point).valuation();
    }
  }
  return q;
}

congruence::AntisymmetricForm block_form(const NovikovLattice& g) {
  return congruence::AntisymmetricForm(antisymmetric_block(pairing_matrix(g)));
}

congruence::Verdict derived_equivalent(const AnalyticTorus& a, const AnalyticTorus& b) {
  if (a.lattice.rank() != b.lattice.rank()) return congruence::Verdict{false, std::nullopt};
  congruence::Verdict v = congruence::congruent(block_form(a.lattice), block_form(b.lattice));
  // congruent gives Wᵀ·X_A·W = X_B; U = (W⁻¹)ᵀ satisfies U·X_B·Uᵀ = X_A.
  if (v.witness) v.witness = v.witness->inverse().transpose();
  return v;
}

bool verify_isometric(const UnimodularMatrix& um, const AnalyticTorus& a, const AnalyticTorus& b) {
  const std::size_t n = a.lattice.rank();
  if (b.lattice.rank() != n) throw std::invalid_argument("verify_isometric: tori have different ranks");
  if (um.size() != 2 * n) throw std::invalid_argument("verify_isometric: U must be 2n x 2n");

  const RationalMatrix qa = pairing_matrix(a.lattice);
  const RationalMatrix qb = pairing_matrix(b.lattice);
  const RationalMatrix u = to_rational(um.matrix());
  const RationalMatrix ui = to_rational(um.inverse().matrix());

  const RationalMatrix f = u.block(0, 0, n, n), g = u.block(0, n, n, n);
  const RationalMatrix h = u.block(n, 0, n, n), i = u.block(n, n, n, n);
  const RationalMatrix i_hat = ui.block(0, 0, n, n), g_hat = -ui.block(0, n, n, n);
  const RationalMatrix h_hat = -ui.block(n, 0, n, n), f_hat = ui.block(n, n, n, n);

  const bool congruence_identity = u * antisymmetric_block(qb) * u.transpose() == antisymmetric_block(qa);
  return congruence_identity && qb * f.transpose() == f_hat * qa && i * qb == qa * i_hat.transpose() &&
         g * qb == qa.transpose() * g_hat.transpose() && h * qb.transpose() == qa * h_hat.transpose();
}

bool verify_isometric(const IntMatrix& u, const AnalyticTorus& a, const AnalyticTorus& b) {
  return verify_isometric(UnimodularMatrix(u), a, b);
}

}  // namespace isotori::analytic
