#include <doctest.h>

#include <set>

#include "isotori/equivalence.hpp"
#include "support.hpp"

using namespace isotori;
using namespace isotori::equivalence;
using symptorus::SpecialIsogenousTorus;
using symptorus::SpecialIsogenyFactor;

namespace {

SpecialIsogenousTorus single(std::vector<Rational> areas, std::int64_t l) {
  return SpecialIsogenousTorus({SpecialIsogenyFactor(std::move(areas), l)});
}

}  // namespace

TEST_CASE("mirror frozen examples") {
  const auto tate = mirror(single({Rational(1)}, 1));
  CHECK(tate.lattice.valuation_matrix() == RationalMatrix{{1}});
  CHECK(analytic::is_abelian_variety(tate));

  const auto a = mirror(single({Rational(1), Rational(1)}, 2));
  CHECK(a.lattice.valuation_matrix() == RationalMatrix{{frac(1, 2), 0}, {frac(1, 2), 1}});

  const SpecialIsogenousTorus prod({SpecialIsogenyFactor({Rational(1), Rational(1)}, 2), SpecialIsogenyFactor({frac(3, 2)}, 1)});
  const auto m = mirror(prod);
  CHECK(m.lattice.valuation_matrix() ==
        RationalMatrix{{frac(1, 2), 0, 0}, {frac(1, 2), 1, 0}, {0, 0, frac(3, 2)}});
  CHECK(m.polarization->phi == IntMatrix{{1, 1, 0}, {0, 2, 0}, {0, 0, 1}});
  CHECK(analytic::is_abelian_variety(m));
}

TEST_CASE("classify frozen examples") {
  const auto t = single({Rational(1), frac(5, 2)}, 3);
  ClassificationReport self = classify(t, t);
  CHECK(self.symplectomorphic);
  CHECK(self.derived_equivalent);
  CHECK(self.divisors_lhs == self.divisors_rhs);

  ClassificationReport no = classify(single({Rational(1)}, 1), single({Rational(2)}, 1));
  CHECK_FALSE(no.symplectomorphic);
  CHECK_FALSE(no.derived_equivalent);
  // Common scale 2: Ω = [[0,1],[−1,0]] → 2·J and [[0,1/2],..] → J.
  CHECK(no.divisors_lhs.divisors() == std::vector<Integer>{2});
  CHECK(no.divisors_rhs.divisors() == std::vector<Integer>{1});
  CHECK_FALSE(no.witness);

  ClassificationReport perm = classify(single({Rational(1), Rational(2)}, 1), single({Rational(2), Rational(1)}, 1));
  CHECK(perm.symplectomorphic);
  CHECK(perm.derived_equivalent);
  REQUIRE(perm.witness);

  ClassificationReport dims = classify(single({Rational(1)}, 1), single({Rational(1), Rational(1)}, 1));
  CHECK_FALSE(dims.symplectomorphic);
  CHECK_FALSE(dims.derived_equivalent);
}

TEST_CASE("classify is symmetric and both paths agree on random pairs") {
  Rng rng(21);
  int equivalent = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto a = single(support::random_areas(rng, n, 3, 2), rng.uniform(1, 3));
    const auto b = single(support::random_areas(rng, n, 3, 2), rng.uniform(1, 3));
    const ClassificationReport ab = classify(a, b);
    const ClassificationReport ba = classify(b, a);
    CHECK(ab.symplectomorphic == ba.symplectomorphic);
    CHECK(ab.derived_equivalent == ba.derived_equivalent);
    CHECK(ab.symplectomorphic == ab.derived_equivalent);
    equivalent += ab.symplectomorphic ? 1 : 0;
  }
  CHECK(equivalent > 5);
}

TEST_CASE("theorem violation carries the matrices") {
  TheoremViolation v("x", RationalMatrix{{1}}, RationalMatrix{{2}}, RationalMatrix{{3}}, RationalMatrix{{4}});
  CHECK(v.block_rhs() == RationalMatrix{{4}});
  CHECK(std::string(v.what()) == "x");
}

TEST_CASE("mirror_object frozen examples") {
  CHECK(mirror_object(LagrangianWord("m", {Rational(0)})) == SheafDescriptor{{SkyscraperPoint{0}}});
  CHECK(mirror_object(LagrangianWord("l", {Rational(0)})) == SheafDescriptor{{DegreeZeroLineBundle{0}}});
  CHECK(mirror_object(LagrangianWord("ml", {frac(1, 3), frac(2, 5)})) ==
        SheafDescriptor{{SkyscraperPoint{frac(1, 3)}, DegreeZeroLineBundle{frac(2, 5)}}});
  CHECK_THROWS_AS(LagrangianWord("mx", {Rational(0), Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS(LagrangianWord("m", {}), std::invalid_argument);
  CHECK_THROWS_AS(mirror_object(LagrangianWord("mm", {Rational(0), Rational(0)}), single({Rational(1)}, 1)),
                  std::invalid_argument);
}

TEST_CASE("mirror_object separates letter patterns") {
  std::set<std::vector<std::size_t>> shapes;
  int words = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      std::string w;
      for (std::size_t i = 0; i < n; ++i) w += (mask >> i) & 1U ? 'l' : 'm';
      const SheafDescriptor d = mirror_object(LagrangianWord(w, std::vector<Rational>(n, Rational(0))));
      std::vector<std::size_t> shape;
      for (const auto& f : d.factors) shape.push_back(f.index());
      shapes.insert(shape);
      ++words;
    }
  CHECK(shapes.size() == static_cast<std::size_t>(words));
}
