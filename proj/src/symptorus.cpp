#include "isotori/symptorus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace isotori::symptorus {

SpecialIsogenyFactor::SpecialIsogenyFactor(std::vector<Rational> areas, std::int64_t l)
    : areas_(std::move(areas)), l_(l) {
  if (areas_.empty()) throw std::invalid_argument("factor needs at least one area");
  for (const auto& a : areas_)
    if (a <= 0) throw std::invalid_argument("areas must be positive, got " + to_string(a));
  if (l_ < 1) throw std::invalid_argument("l must be a positive integer");
}

SpecialIsogenousTorus::SpecialIsogenousTorus(std::vector<SpecialIsogenyFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("torus needs at least one factor");
  for (const auto& f : factors_) rank_ += f.rank();
}

SymplecticLattice::SymplecticLattice(RationalMatrix basis) : basis_(std::move(basis)) {
  if (!basis_.square() || determinant(basis_) == 0) throw std::invalid_argument("lattice basis must be square and nonsingular");
}

RationalMatrix lattice_s_block(const SpecialIsogenyFactor& f) {
  const std::size_t n = f.rank();
  RationalMatrix s(n, n);
  const Rational l(f.l());
  for (std::size_t i = 0; i < n; ++i) s(i, 0) = f.areas()[i] / l;
  for (std::size_t i = 1; i < n; ++i) s(i, i) = f.areas()[i];
  return s;
}

namespace {

// blockdiag(S, I) layout for a product: s-blocks along the diagonal of the
// first N rows, identity on the t-coordinates.
RationalMatrix with_t_identity(const RationalMatrix& s_part) {
  const std::size_t n = s_part.rows();
  RationalMatrix m(2 * n, 2 * n);
  m.set_block(0, 0, s_part);
  m.set_block(n, n, RationalMatrix::identity(n));
  return m;
}

}  // namespace

SymplecticLattice standard_lattice(const SpecialIsogenyFactor& f) { return SymplecticLattice(with_t_identity(lattice_s_block(f))); }

SymplecticLattice standard_lattice(const SpecialIsogenousTorus& t) {
  std::vector<RationalMatrix> blocks;
  for (const auto& f : t.factors()) blocks.push_back(lattice_s_block(f));
  return SymplecticLattice(with_t_identity(block_diagonal(blocks)));
}

RationalMatrix normalizing_block(const SpecialIsogenyFactor& f) {
  const std::size_t n = f.rank();
  const auto& a = f.areas();
  RationalMatrix m(n, n);
  m(0, 0) = Rational(f.l()) / a[0];
  for (std::size_t i = 1; i < n; ++i) {
    m(i, 0) = -1 / a[0];
    m(i, i) = 1 / a[i];
  }
  return m;
}

RationalMatrix normalizing_matrix(const SpecialIsogenyFactor& f) { return with_t_identity(normalizing_block(f)); }

RationalMatrix normalizing_block(const SpecialIsogenousTorus& t) {
  std::vector<RationalMatrix> blocks;
  for (const auto& f : t.factors()) blocks.push_back(normalizing_block(f));
  return block_diagonal(blocks);
}

congruence::AntisymmetricForm omega(const SpecialIsogenousTorus& t) {
  return congruence::AntisymmetricForm(antisymmetric_block(normalizing_block(t)));
}

RationalMatrix general_quotient_generators(const std::vector<Rational>& areas, const std::vector<std::int64_t>& l_vector) {
  const std::size_t n = areas.size();
  if (n == 0 || l_vector.size() != n) throw std::invalid_argument("areas and l-vector must be nonempty and of equal length");
  RationalMatrix g(2 * n, 2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (areas[i] <= 0) throw std::invalid_argument("areas must be positive");
    if (l_vector[i] < 1) throw std::invalid_argument("l-vector entries must be positive");
    g(i, 0) = areas[i] / Rational(l_vector[i]);
  }
  for (std::size_t i = 1; i < n; ++i) g(i, i) = areas[i];
  for (std::size_t j = 0; j < n; ++j) g(n + j, n + j) = 1;
  g(0, 2 * n) = areas[0];
  return g;
}

IntMatrix scaled_lattice_hnf(const RationalMatrix& generators, const Integer& scale) {
  return lattice_basis(to_integer(Rational(scale) * generators));
}

bool same_lattice(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) return false;
  Integer c = common_denominator(a);
  Integer cb = common_denominator(b);
  mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
  return scaled_lattice_hnf(a, c) == scaled_lattice_hnf(b, c);
}

namespace {

// Moves coordinate `first` to the front (s-rows only matter here).
RationalMatrix rotate_rows(const RationalMatrix& m, std::size_t first, bool to_back) {
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  order.erase(order.begin() + static_cast<std::ptrdiff_t>(first));
  if (to_back)
    order.push_back(first);
  else
    order.insert(order.begin(), first);
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(order[i], j);
  return r;
}

RationalMatrix permute_symplectic_rows(const RationalMatrix& g, const std::vector<std::size_t>& coords) {
  const std::size_t n = coords.size();
  RationalMatrix r(g.rows(), g.cols());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      r(k, j) = g(coords[k], j);
      r(n + k, j) = g(n + coords[k], j);
    }
  return r;
}

}  // namespace

QuotientReduction reduce_general_quotient(const std::vector<Rational>& areas, const std::vector<std::int64_t>& l_vector) {
  const RationalMatrix gens = general_quotient_generators(areas, l_vector);
  std::int64_t g = 0;
  for (auto l : l_vector) g = std::gcd(g, l);
  if (g != 1) throw std::invalid_argument("gcd of the l-vector must be 1");

  const std::size_t n = areas.size();
  const RationalMatrix s_gens = gens.block(0, 0, n, gens.cols());
  const Integer scale = common_denominator(s_gens);
  const Rational inv_scale = 1 / Rational(scale);

  // Axis intersection a_i and projection b_i of the s-lattice for each coordinate.
  std::vector<Rational> axis(n), ratio(n);
  for (std::size_t i = 0; i < n; ++i) {
    const IntMatrix last = scaled_lattice_hnf(rotate_rows(s_gens, i, true), scale);
    const IntMatrix first = scaled_lattice_hnf(rotate_rows(s_gens, i, false), scale);
    axis[i] = Rational(last(n - 1, n - 1)) * inv_scale;
    const Rational projection = Rational(first(0, 0)) * inv_scale;
    ratio[i] = axis[i] / projection;
  }

  // Group coordinates by ratio; first-appearance order keeps output deterministic.
  std::vector<std::pair<Integer, std::vector<std::size_t>>> classes;
  std::vector<std::size_t> split_coords;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer r = ratio[i].get_num();
    if (r == 1) {
      split_coords.push_back(i);
      continue;
    }
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& c) { return c.first == r; });
    if (it == classes.end())
      classes.push_back({r, {i}});
    else
      it->second.push_back(i);
  }

  std::vector<SpecialIsogenyFactor> factors;
  std::vector<std::size_t> coords;
  for (const auto& [r, members] : classes) {
    std::vector<Rational> a;
    for (auto i : members) a.push_back(axis[i]);
    factors.emplace_back(std::move(a), r.get_si());
    coords.insert(coords.end(), members.begin(), members.end());
  }
  if (!split_coords.empty()) {
    std::vector<Rational> a;
    for (auto i : split_coords) a.push_back(axis[i]);
    factors.emplace_back(std::move(a), 1);
    coords.insert(coords.end(), split_coords.begin(), split_coords.end());
  }

  SpecialIsogenousTorus torus(std::move(factors));
  if (!same_lattice(standard_lattice(torus).basis(), permute_symplectic_rows(gens, coords)))
    throw std::domain_error(
        "the generated lattice is not a product of special isogenous tori in these coordinates "
        "(coordinate index ratios are not pairwise coprime)");
  return QuotientReduction{std::move(torus), std::move(coords)};
}

congruence::Verdict symplectomorphic(const SpecialIsogenousTorus& a, const SpecialIsogenousTorus& b) {
  if (a.rank() != b.rank()) return congruence::Verdict{false, std::nullopt};
  return congruence::congruent(omega(a), omega(b));
}

}  // namespace isotori::symptorus
