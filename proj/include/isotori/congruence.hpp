#pragma once

#include <optional>
#include <vector>

#include "isotori/exactint.hpp"

namespace isotori::congruence {

/// Nondegenerate antisymmetric rational form of even dimension 2n.
class AntisymmetricForm {
 public:
  /// Throws std::invalid_argument unless m is square, even-dimensional,
  /// antisymmetric and has nonzero Pfaffian.
  explicit AntisymmetricForm(RationalMatrix m);
  explicit AntisymmetricForm(const IntMatrix& m) : AntisymmetricForm(to_rational(m)) {}

  const RationalMatrix& matrix() const { return m_; }
  std::size_t dimension() const { return m_.rows(); }
  const Rational& pfaffian() const { return pf_; }

 private:
  RationalMatrix m_;
  Rational pf_;
};

/// Symplectic elementary divisors d_1 | d_2 | ... | d_n, all positive.
class DivisorChain {
 public:
  DivisorChain() = default;
  explicit DivisorChain(std::vector<Integer> divisors);

  const std::vector<Integer>& divisors() const { return d_; }
  std::size_t size() const { return d_.size(); }
  bool operator==(const DivisorChain& o) const { return d_ == o.d_; }

 private:
  std::vector<Integer> d_;
};

struct NormalForm {
  DivisorChain chain;
  UnimodularMatrix u;  // uᵀ·A·u == ⊕ d_i·J₂
};

/// ⊕ d_i·[[0,1],[−1,0]] with the blocks on consecutive index pairs.
IntMatrix standard_form(const DivisorChain& chain);

/*
 * Frobenius normal form of a nondegenerate integer antisymmetric matrix.
 *
 * Repeatedly moves the entry of least absolute value (ties: lowest (i, j))
 * to position (2t, 2t+1) by simultaneous row/column swaps, clears rows 2t and
 * 2t+1 with congruent integer operations, and enforces that the pivot divides
 * every remaining entry before recursing on the trailing block. The chain is a
 * complete invariant of the GL(2n, Z)-congruence class.
 *
 * Throws std::invalid_argument on non-antisymmetric or degenerate input.
 */
NormalForm symplectic_divisors(const IntMatrix& a);

struct Verdict {
  bool equivalent = false;
  std::optional<UnimodularMatrix> witness;
};

/// Decides whether Uᵀ·A·U == B for some U in GL(2n, Z). The witness, when
/// present, has been verified exactly against the rational inputs.
/// Throws std::invalid_argument on dimension mismatch.
Verdict congruent(const AntisymmetricForm& a, const AntisymmetricForm& b);

/// Pair of divisor chains of both forms after one common lcd scaling.
std::pair<DivisorChain, DivisorChain> scaled_divisors(const AntisymmetricForm& a, const AntisymmetricForm& b);

/*
 * Exhaustive oracle: searches integer U with entries in [−bound, bound],
 * det U = ±1 and Uᵀ·A·U = B. Candidates are ordered column-major
 * lexicographically (first column most significant, entries from −bound
 * upward); the first solution in that order is returned. Partial column sets
 * that already violate an entry of B are pruned, which does not change the
 * order in which solutions are met.
 *
 * Limited to dimension ≤ 4 and (2·bound+1)^(dim²) ≤ 10⁹ candidates; larger
 * requests throw std::invalid_argument pointing at congruent().
 */
Verdict bruteforce_congruent(const IntMatrix& a, const IntMatrix& b, long bound);

}  // namespace isotori::congruence
