#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "isotori/analytic.hpp"
#include "isotori/symptorus.hpp"

namespace isotori::equivalence {

/// Product Lagrangian L^{W,t}: letter 'm' (meridian) or 'l' (longitude) per coordinate.
class LagrangianWord {
 public:
  LagrangianWord(std::string letters, std::vector<Rational> params);
  const std::string& letters() const { return letters_; }
  const std::vector<Rational>& params() const { return params_; }
  std::size_t size() const { return letters_.size(); }

 private:
  std::string letters_;
  std::vector<Rational> params_;
};

/// O(p_b − p₀)
struct DegreeZeroLineBundle {
  Rational b;
  bool operator==(const DegreeZeroLineBundle&) const = default;
};

/// O_{T^a·p₀}
struct SkyscraperPoint {
  Rational a;
  bool operator==(const SkyscraperPoint&) const = default;
};

using SheafFactor = std::variant<DegreeZeroLineBundle, SkyscraperPoint>;

/// Box product E₁ ⊠ … ⊠ Eₙ.
struct SheafDescriptor {
  std::vector<SheafFactor> factors;
  bool operator==(const SheafDescriptor&) const = default;
};

SheafDescriptor mirror_object(const LagrangianWord& w);
/// Throws std::invalid_argument when the word length differs from the rank.
SheafDescriptor mirror_object(const LagrangianWord& w, const symptorus::SpecialIsogenousTorus& t);

/// Factor-wise A(ᾱ)_l with block-diagonal valuation matrix and polarization.
analytic::AnalyticTorus mirror(const symptorus::SpecialIsogenousTorus& t);

/// Analytic counterpart of a raw normalizing matrix M: the lattice with valuation matrix M⁻¹.
analytic::AnalyticTorus mirror_of_normalizing(const RationalMatrix& m);

struct ClassificationReport {
  bool symplectomorphic = false;
  bool derived_equivalent = false;
  congruence::DivisorChain divisors_lhs;
  congruence::DivisorChain divisors_rhs;
  std::optional<UnimodularMatrix> witness;  // symplectic side: Wᵀ·Ω₁·W = Ω₂
};

/// Raised when the two deciders disagree. Carries every matrix involved.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const std::string& what, RationalMatrix omega_lhs, RationalMatrix omega_rhs, RationalMatrix block_lhs,
                   RationalMatrix block_rhs);
  const RationalMatrix& omega_lhs() const { return omega_lhs_; }
  const RationalMatrix& omega_rhs() const { return omega_rhs_; }
  const RationalMatrix& block_lhs() const { return block_lhs_; }
  const RationalMatrix& block_rhs() const { return block_rhs_; }

 private:
  RationalMatrix omega_lhs_, omega_rhs_, block_lhs_, block_rhs_;
};

/*
 * Runs symplectomorphic() on the Ω matrices and derived_equivalent() on the
 * mirrors. Divisor chains come from one common lcd scaling of both Ω; for
 * tori of different dimension each Ω is scaled on its own and both verdicts
 * are false. Throws TheoremViolation when the verdicts disagree.
 */
ClassificationReport classify(const symptorus::SpecialIsogenousTorus& a, const symptorus::SpecialIsogenousTorus& b);

/// Same two decision paths for raw normalizing matrices (Ω from M, lattice from M⁻¹).
ClassificationReport classify_normalizing(const RationalMatrix& m_lhs, const RationalMatrix& m_rhs);

}  // namespace isotori::equivalence
