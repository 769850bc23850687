#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isotori/matrix.hpp"
#include "isotori/random.hpp"

namespace isotori::strictify {

using Element = std::size_t;

/// Finite group on elements 0..N−1 with 0 the identity.
class FiniteGroup {
 public:
  /// Validates closure, identity, inverses, associativity and that the
  /// generators generate. Throws std::invalid_argument otherwise.
  FiniteGroup(std::vector<std::vector<Element>> table, std::vector<Element> generators, std::string name = {});

  /// Closure of permutation generators under composition (a·b)(x) = a(b(x)),
  /// elements numbered in breadth-first discovery order.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& generators, std::string name);
  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup symmetric3();
  static FiniteGroup dihedral4();
  static FiniteGroup klein4();
  /// "Z<n>", "S3", "D4" or "Z2xZ2".
  static FiniteGroup preset(std::string_view name);
  /// Z1..Z12, S3, D4, Z2xZ2.
  static std::vector<std::string> catalog();

  std::size_t order() const { return table_.size(); }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<std::vector<Element>>& table() const { return table_; }
  const std::string& name() const { return name_; }

 private:
  std::vector<std::vector<Element>> table_;
  std::vector<Element> generators_;
  std::vector<Element> inverse_;
  std::string name_;
};

/// First nontrivial homomorphism G → {±1} in generator-sign enumeration
/// order, or the trivial one when none exists.
std::vector<int> sign_character(const FiniteGroup& g);

/*
 * Abelian coefficient group with a G-action by automorphisms. Either Q*
 * (multiplicative, g acts by x ↦ x^{±1}) or Z/m (additive, g acts by a unit
 * multiplier). Values are stored as Rationals; Z/m residues lie in [0, m).
 */
class CoefficientGroup {
 public:
  enum class Kind { Rationals, Cyclic };

  /// exponents[g] ∈ {±1}; empty means trivial action.
  static CoefficientGroup rationals(const FiniteGroup& g, std::vector<int> exponents = {});
  /// multipliers[g] units mod m; empty means trivial action.
  static CoefficientGroup cyclic(std::int64_t m, const FiniteGroup& g, std::vector<std::int64_t> multipliers = {});
  /// "Qstar", "Qstar-sign", "Z<m>", "Z<m>-sign"; "-sign" acts through sign_character.
  static CoefficientGroup parse(std::string_view model, const FiniteGroup& g);

  Kind kind() const { return kind_; }
  std::int64_t modulus() const { return modulus_; }
  const std::string& name() const { return name_; }
  bool trivial_action() const;

  bool contains(const Rational& a) const;
  Rational identity() const;
  Rational combine(const Rational& a, const Rational& b) const;
  Rational invert(const Rational& a) const;
  Rational act(Element g, const Rational& a) const;
  Rational random_element(Rng& rng) const;

 private:
  CoefficientGroup(Kind kind, std::int64_t modulus, std::vector<std::int64_t> action, std::string name);

  Kind kind_;
  std::int64_t modulus_ = 0;
  std::vector<std::int64_t> action_;  // exponent (Q*) or multiplier (Z/m) per group element
  std::string name_;
};

/// Normalised 2-cocycle φ(g₁, g₀), validated on construction against
/// g₃·φ(g₂,g₁) ∘ φ(g₃,g₂g₁) = φ(g₃,g₂) ∘ φ(g₃g₂,g₁) for all triples.
class CoherentActionData {
 public:
  CoherentActionData(FiniteGroup group, CoefficientGroup coeff, std::vector<std::vector<Rational>> phi);

  const FiniteGroup& group() const { return group_; }
  const CoefficientGroup& coeff() const { return coeff_; }
  const Rational& phi(Element g1, Element g0) const { return phi_[g1][g0]; }
  const std::vector<std::vector<Rational>>& table() const { return phi_; }

 private:
  FiniteGroup group_;
  CoefficientGroup coeff_;
  std::vector<std::vector<Rational>> phi_;
};

CoherentActionData trivial_action_data(const FiniteGroup& g, const CoefficientGroup& a);

/// Coboundary of a random 1-cochain, times a carry cocycle pulled back along a
/// cyclic quotient when one is available (valued in the action's fixed points).
CoherentActionData random_cocycle(const FiniteGroup& g, const CoefficientGroup& a, Rng& rng);

/// f[g][h] models F_g[h] : X_{gh} → g·X_h.
struct CompatibleSystem {
  std::vector<std::vector<Rational>> f;
  bool operator==(const CompatibleSystem&) const = default;
};

/// Edge v₁ → v₂ labelled t, present iff v₁ = t·v₂. Carries F_t[v₂].
struct CayleyEdge {
  Element from;
  Element to;
  Element label;
  auto operator<=>(const CayleyEdge&) const = default;
};

struct CayleyGraph {
  std::size_t vertices = 0;
  std::vector<CayleyEdge> edges;  // by source vertex, then generator order
};

CayleyGraph cayley_graph(const FiniteGroup& g);

/// BFS from the identity along out-edges, generators in order. Every vertex
/// is reached from e by an oriented path; edges are listed in discovery order.
struct SpanningTree {
  std::vector<CayleyEdge> edges;
};

SpanningTree spanning_tree(const CayleyGraph& graph);

using TreeAssignment = std::map<CayleyEdge, Rational>;

/*
 * Builds the compatible system whose tree edges carry the given values
 * (identity where unassigned). Walking the tree from e, each edge p → c with
 * label t fixes F_c[e] through the compatibility relation at
 * (t, c); every other component is then forced by compatibility at (g, h)
 * evaluated on e. The result is re-verified on all pairs.
 *
 * Throws std::invalid_argument for assignments on non-tree edges or values
 * outside the coefficient group.
 */
CompatibleSystem strictify(const CoherentActionData& data, const TreeAssignment& assignment = {});

/// Checks F_e = id and φ(g₁,g₀)·(g₁·F_{g₀}[h])·F_{g₁}[g₀h] = F_{g₁g₀}[h] for all g₁, g₀, h.
bool verify_compatibility(const CompatibleSystem& f, const CoherentActionData& data);

/// (F·s)_g[h] = F_g[h·s], the system of X·s.
CompatibleSystem shifted(const CompatibleSystem& f, Element s, const FiniteGroup& g);

/// Φ·s = (F^Y_s[e])⁻¹ · (s·Φ) · F^X_s[e].
Rational strict_action(Element s, const Rational& phi_value, const CompatibleSystem& fx, const CompatibleSystem& fy,
                       const CoherentActionData& data);

/// (1/|G|)·Σ values. With characteristic m > 0, throws std::domain_error unless gcd(|G|, m) = 1.
RationalMatrix average(const FiniteGroup& g, const std::vector<RationalMatrix>& values, std::int64_t characteristic = 0);

/// p = 3t² − 2t³. Throws std::domain_error unless (t² − t)² = 0.
RationalMatrix idempotent_fix(const RationalMatrix& t);

}  // namespace isotori::strictify
