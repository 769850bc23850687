#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isotori/congruence.hpp"

namespace isotori::analytic {

/// Finite Novikov sum Σ cᵢ·T^{λᵢ} with rational exponents, kept sorted by
/// strictly increasing exponent with no zero coefficients.
class NovikovScalar {
 public:
  struct Term {
    Rational coeff;
    Rational exp;
    bool operator==(const Term&) const = default;
  };

  NovikovScalar() = default;  // zero
  explicit NovikovScalar(std::vector<Term> terms);
  static NovikovScalar monomial(const Rational& coeff, const Rational& exp);
  static NovikovScalar one() { return monomial(1, 0); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Smallest exponent. Throws std::domain_error on zero.
  Rational valuation() const;
  /// Integer power; negative powers only for monomials (std::domain_error otherwise).
  NovikovScalar pow(long k) const;

  friend NovikovScalar operator+(const NovikovScalar& a, const NovikovScalar& b);
  friend NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b);
  bool operator==(const NovikovScalar&) const = default;

 private:
  std::vector<Term> terms_;
};

inline Rational valuation(const NovikovScalar& x) { return x.valuation(); }

/// Full-rank lattice in (Λ*)ⁿ, stored as its valuation matrix: column j holds
/// the valuations of the coordinates of generator eⱼ. Unit parts are 1.
class NovikovLattice {
 public:
  explicit NovikovLattice(RationalMatrix valuation_matrix);
  const RationalMatrix& valuation_matrix() const { return m_; }
  std::size_t rank() const { return m_.rows(); }
  /// Generator eⱼ as a point of (Λ*)ⁿ: coordinates T^{M[k][j]}.
  std::vector<NovikovScalar> generator(std::size_t j) const;
  bool operator==(const NovikovLattice&) const = default;

 private:
  RationalMatrix m_;
};

/// Row i is the exponent vector of the character φ(eᵢ).
struct Polarization {
  IntMatrix phi;
  bool operator==(const Polarization&) const = default;
};

struct AnalyticTorus {
  NovikovLattice lattice;
  std::optional<Polarization> polarization;
};

/// z^m evaluated at a point of (Λ*)ⁿ.
NovikovScalar evaluate_character(const std::vector<Integer>& exponents, const std::vector<NovikovScalar>& point);

/// A(ᾱ)_l: generators (q^{α₁/l}, …, q^{αₙ/l}) and q^{αᵢ} in coordinate i ≥ 2,
/// polarization φ(V₁) = z₁⋯zₙ, φ(Vᵢ) = zᵢ^l.
AnalyticTorus standard_analytic_torus(const std::vector<Rational>& areas, std::int64_t l);

/// Gᵢⱼ = σ(φ(eᵢ)(eⱼ)), evaluated through Novikov characters. Equals φ·M_Γ.
/// Throws std::invalid_argument when the torus carries no polarization.
RationalMatrix gram_matrix(const AnalyticTorus& t);

/// Symmetric and positive definite Gram matrix (Sylvester's criterion).
/// Throws std::invalid_argument when the torus carries no polarization.
bool is_abelian_variety(const AnalyticTorus& t);

/// Dual lattice; its valuation matrix is M_Γᵀ.
NovikovLattice dual(const NovikovLattice& g);

/// Qᵢⱼ = σ(⟨êⁱ, eⱼ⟩), the valuation of the i-th coordinate character on eⱼ.
/// For A(ᾱ)_l this is Q̃ with M·Q̃ = I.
RationalMatrix pairing_matrix(const NovikovLattice& g);

/// [[0, Qᵀ], [−Q, 0]] built from pairing_matrix.
congruence::AntisymmetricForm block_form(const NovikovLattice& g);

/*
 * Derived-equivalence test: congruence of the two block forms. Ranks that
 * differ give a negative verdict. The witness U is returned in the
 * isometric orientation U·X_B·Uᵀ = X_A (X = block_form), so that
 * verify_isometric(U, A₁, A₂) holds.
 */
congruence::Verdict derived_equivalent(const AnalyticTorus& a, const AnalyticTorus& b);

/*
 * Splits U = [[F, G], [H, I]] and U⁻¹ = [[Î, −Ĝ], [−Ĥ, F̂]] into n×n blocks and
 * checks Q_B·Fᵀ = F̂·Q_A, I·Q_B = Q_A·Îᵀ, G·Q_B = Q_Aᵀ·Ĝᵀ, H·Q_Bᵀ = Q_A·Ĥᵀ
 * together with U·X_B·Uᵀ = X_A.
 *
 * The IntMatrix overload throws std::invalid_argument when U is not
 * unimodular; both throw when U is not 2n×2n for the common rank n.
 */
bool verify_isometric(const UnimodularMatrix& u, const AnalyticTorus& a, const AnalyticTorus& b);
bool verify_isometric(const IntMatrix& u, const AnalyticTorus& a, const AnalyticTorus& b);

}  // namespace isotori::analytic
