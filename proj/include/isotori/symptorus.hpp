#pragma once

#include <cstdint>
#include <vector>

#include "isotori/congruence.hpp"

namespace isotori::symptorus {

/// One factor T(ᾱ)_l: the split torus of areas ᾱ modulo the diagonal Z/l
/// translation by (α₁/l, …, αₙ/l) in the s-coordinates. l = 1 is split.
class SpecialIsogenyFactor {
 public:
  SpecialIsogenyFactor(std::vector<Rational> areas, std::int64_t l);

  const std::vector<Rational>& areas() const { return areas_; }
  std::int64_t l() const { return l_; }
  std::size_t rank() const { return areas_.size(); }
  bool split() const { return l_ == 1; }
  bool operator==(const SpecialIsogenyFactor&) const = default;

 private:
  std::vector<Rational> areas_;
  std::int64_t l_;
};

/// Finite product of special isogeny factors. Coordinates are ordered
/// (s₁, …, s_N, t₁, …, t_N) with the s-coordinates of each factor contiguous
/// and in factor order.
class SpecialIsogenousTorus {
 public:
  explicit SpecialIsogenousTorus(std::vector<SpecialIsogenyFactor> factors);

  const std::vector<SpecialIsogenyFactor>& factors() const { return factors_; }
  /// N, half the real dimension.
  std::size_t rank() const { return rank_; }
  bool operator==(const SpecialIsogenousTorus&) const = default;

 private:
  std::vector<SpecialIsogenyFactor> factors_;
  std::size_t rank_ = 0;
};

/// Full-rank lattice in R^{2N}; columns are generators.
class SymplecticLattice {
 public:
  explicit SymplecticLattice(RationalMatrix basis);
  const RationalMatrix& basis() const { return basis_; }

 private:
  RationalMatrix basis_;
};

/// s-block of the lattice basis: column 1 is (α₁/l, …, αₙ/l), column i ≥ 2 is αᵢ·eᵢ.
RationalMatrix lattice_s_block(const SpecialIsogenyFactor& f);

SymplecticLattice standard_lattice(const SpecialIsogenyFactor& f);
SymplecticLattice standard_lattice(const SpecialIsogenousTorus& t);

/// The lower-triangular M with M[0][0] = l/α₁, M[i][0] = −1/α₁, M[i][i] = 1/αᵢ.
RationalMatrix normalizing_block(const SpecialIsogenyFactor& f);
/// M̃ = blockdiag(M, Iₙ); M̃ · standard_lattice(f) is the identity basis.
RationalMatrix normalizing_matrix(const SpecialIsogenyFactor& f);
/// Block-diagonal M over all factors.
RationalMatrix normalizing_block(const SpecialIsogenousTorus& t);

/// Pull-back of the standard symplectic form: [[0, Mᵀ], [−M, 0]].
congruence::AntisymmetricForm omega(const SpecialIsogenousTorus& t);

/// Result of reducing a general quotient T(ᾱ)_{l̄}.
struct QuotientReduction {
  SpecialIsogenousTorus torus;
  /// coordinates[k] is the input coordinate that becomes (s_k, t_k) of torus.
  std::vector<std::size_t> coordinates;
};

/// Lattice generated by the n+1 s-vectors (αᵢ/lᵢ)ᵢ, αᵢ·eᵢ (2 ≤ i ≤ n), α₁·e₁
/// together with the n t-unit vectors, as a 2n × (2n+1) generator matrix.
RationalMatrix general_quotient_generators(const std::vector<Rational>& areas, const std::vector<std::int64_t>& l_vector);

/*
 * Rewrites T(ᾱ)_{l̄}, gcd(l̄) = 1, as a product of special isogenous tori with
 * exactly the same lattice (after the returned coordinate permutation).
 *
 * For each coordinate i the lattice meets the s_i-axis in aᵢ·Z and projects
 * onto it as bᵢ·Z (both read off Hermite normal forms); rᵢ = aᵢ/bᵢ. Coordinates
 * with rᵢ = 1 form a split factor of areas aᵢ, and each class of equal rᵢ > 1
 * forms a factor T(a)_{rᵢ}. The candidate is accepted only after its standard
 * lattice has the same HNF as the generated lattice.
 *
 * Throws std::invalid_argument for bad input (gcd ≠ 1, nonpositive areas) and
 * std::domain_error when the lattice is not such a product, which happens when
 * the ratio classes are not pairwise coprime, e.g. l̄ = (3, 6, 2).
 */
QuotientReduction reduce_general_quotient(const std::vector<Rational>& areas, const std::vector<std::int64_t>& l_vector);

/// Canonical HNF of the column lattice of a rational generator matrix scaled by `scale`.
IntMatrix scaled_lattice_hnf(const RationalMatrix& generators, const Integer& scale);

/// True iff both generator matrices span the same lattice (HNF after one common scaling).
bool same_lattice(const RationalMatrix& a, const RationalMatrix& b);

/// Linear symplectomorphism test: congruence of the two Ω matrices. Unequal
/// dimensions give a negative verdict.
congruence::Verdict symplectomorphic(const SpecialIsogenousTorus& a, const SpecialIsogenousTorus& b);

}  // namespace isotori::symptorus
