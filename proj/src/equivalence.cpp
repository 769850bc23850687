#include "isotori/equivalence.hpp"

namespace isotori::equivalence {

LagrangianWord::LagrangianWord(std::string letters, std::vector<Rational> params)
    : letters_(std::move(letters)), params_(std::move(params)) {
  if (letters_.empty()) throw std::invalid_argument("Lagrangian word must be nonempty");
  if (letters_.size() != params_.size()) throw std::invalid_argument("Lagrangian word needs one parameter per letter");
  for (char c : letters_)
    if (c != 'm' && c != 'l') throw std::invalid_argument(std::string("unknown letter '") + c + "' (expected m or l)");
}

SheafDescriptor mirror_object(const LagrangianWord& w) {
  SheafDescriptor d;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.letters()[i] == 'l')
      d.factors.emplace_back(DegreeZeroLineBundle{w.params()[i]});
    else
      d.factors.emplace_back(SkyscraperPoint{w.params()[i]});
  }
  return d;
}

SheafDescriptor mirror_object(const LagrangianWord& w, const symptorus::SpecialIsogenousTorus& t) {
  if (w.size() != t.rank()) throw std::invalid_argument("word length does not match the torus rank");
  return mirror_object(w);
}

analytic::AnalyticTorus mirror(const symptorus::SpecialIsogenousTorus& t) {
  std::vector<RationalMatrix> vals;
  std::vector<IntMatrix> pols;
  for (const auto& f : t.factors()) {
    analytic::AnalyticTorus a = analytic::standard_analytic_torus(f.areas(), f.l());
    vals.push_back(a.lattice.valuation_matrix());
    pols.push_back(a.polarization->phi);
  }
  return analytic::AnalyticTorus{analytic::NovikovLattice(block_diagonal(vals)), analytic::Polarization{block_diagonal(pols)}};
}

analytic::AnalyticTorus mirror_of_normalizing(const RationalMatrix& m) {
  return analytic::AnalyticTorus{analytic::NovikovLattice(inverse(m)), std::nullopt};
}

TheoremViolation::TheoremViolation(const std::string& what, RationalMatrix omega_lhs, RationalMatrix omega_rhs,
                                   RationalMatrix block_lhs, RationalMatrix block_rhs)
    : std::runtime_error(what),
      omega_lhs_(std::move(omega_lhs)),
      omega_rhs_(std::move(omega_rhs)),
      block_lhs_(std::move(block_lhs)),
      block_rhs_(std::move(block_rhs)) {}

namespace {

ClassificationReport decide(const congruence::AntisymmetricForm& omega_a, const congruence::AntisymmetricForm& omega_b,
                            const analytic::AnalyticTorus& mirror_a, const analytic::AnalyticTorus& mirror_b) {
  ClassificationReport r;
  if (omega_a.dimension() != omega_b.dimension()) {
    r.divisors_lhs = congruence::scaled_divisors(omega_a, omega_a).first;
    r.divisors_rhs = congruence::scaled_divisors(omega_b, omega_b).first;
  } else {
    std::tie(r.divisors_lhs, r.divisors_rhs) = congruence::scaled_divisors(omega_a, omega_b);
  }

  congruence::Verdict sym{false, std::nullopt};
  if (omega_a.dimension() == omega_b.dimension()) sym = congruence::congruent(omega_a, omega_b);
  const congruence::Verdict der = analytic::derived_equivalent(mirror_a, mirror_b);

  if (sym.equivalent != der.equivalent) {
    throw TheoremViolation(std::string("symplectic and analytic verdicts disagree: symplectomorphic=") +
                               (sym.equivalent ? "true" : "false") +
                               ", derived_equivalent=" + (der.equivalent ? "true" : "false"),
                           omega_a.matrix(), omega_b.matrix(), analytic::block_form(mirror_a.lattice).matrix(),
                           analytic::block_form(mirror_b.lattice).matrix());
  }
  r.symplectomorphic = sym.equivalent;
  r.derived_equivalent = der.equivalent;
  r.witness = std::move(sym.witness);
  return r;
}

}  // namespace

ClassificationReport classify(const symptorus::SpecialIsogenousTorus& a, const symptorus::SpecialIsogenousTorus& b) {
  return decide(symptorus::omega(a), symptorus::omega(b), mirror(a), mirror(b));
}

ClassificationReport classify_normalizing(const RationalMatrix& m_lhs, const RationalMatrix& m_rhs) {
  return decide(congruence::AntisymmetricForm(antisymmetric_block(m_lhs)),
                congruence::AntisymmetricForm(antisymmetric_block(m_rhs)), mirror_of_normalizing(m_lhs),
                mirror_of_normalizing(m_rhs));
}

}  // namespace isotori::equivalence
