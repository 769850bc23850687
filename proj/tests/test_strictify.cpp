#include <doctest.h>

#include <set>

#include "isotori/strictify.hpp"
#include "support.hpp"

using namespace isotori;
using namespace isotori::strictify;

namespace {

// Random assignment on the spanning tree edges.
TreeAssignment random_assignment(const FiniteGroup& g, const CoefficientGroup& a, Rng& rng) {
  TreeAssignment out;
  for (const auto& e : spanning_tree(cayley_graph(g)).edges) out[e] = a.random_element(rng);
  return out;
}

// Regular representation: ρ(g)·e_h = e_{gh}.
RationalMatrix regular(const FiniteGroup& g, Element x) {
  RationalMatrix r(g.order(), g.order());
  for (Element h = 0; h < g.order(); ++h) r(g.mul(x, h), h) = 1;
  return r;
}

}  // namespace

TEST_CASE("group validation and presets") {
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {0}), std::invalid_argument);
  // Latin square that is not associative.
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}, {1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::preset("A5"), std::invalid_argument);

  std::vector<std::size_t> orders;
  for (const auto& name : FiniteGroup::catalog()) orders.push_back(FiniteGroup::preset(name).order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 6, 8, 4});

  const FiniteGroup s3 = FiniteGroup::symmetric3();
  bool abelian = true;
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) abelian = abelian && s3.mul(a, b) == s3.mul(b, a);
  CHECK_FALSE(abelian);
  int odd = 0;
  for (int s : sign_character(s3)) odd += s == -1 ? 1 : 0;
  CHECK(odd == 3);
}

TEST_CASE("coefficient groups") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const CoefficientGroup q = CoefficientGroup::parse("Qstar-sign", z2);
  CHECK(q.act(1, Rational(3)) == frac(1, 3));
  CHECK(q.combine(Rational(2), frac(1, 2)) == 1);
  CHECK_FALSE(q.contains(Rational(0)));
  const CoefficientGroup z7 = CoefficientGroup::parse("Z7-sign", z2);
  CHECK(z7.act(1, Rational(3)) == 4);
  CHECK(z7.combine(Rational(5), Rational(4)) == 2);
  CHECK_FALSE(z7.contains(Rational(7)));
  CHECK_FALSE(z7.contains(frac(1, 2)));
  CHECK_THROWS_AS(CoefficientGroup::parse("Z0", z2), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientGroup::parse("Qplus", z2), std::invalid_argument);
}

TEST_CASE("cocycle validation") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const CoefficientGroup q = CoefficientGroup::rationals(z2);
  CHECK_NOTHROW(CoherentActionData(z2, q, {{1, 1}, {1, 5}}));
  CHECK_THROWS_AS(CoherentActionData(z2, q, {{1, 2}, {1, 5}}), std::invalid_argument);
  // With the inverting action, φ(g,g) must satisfy g·c = c, so only ±1 survive.
  const CoefficientGroup qs = CoefficientGroup::parse("Qstar-sign", z2);
  CHECK_THROWS_AS(CoherentActionData(z2, qs, {{1, 1}, {1, 5}}), std::invalid_argument);
  CHECK_NOTHROW(CoherentActionData(z2, qs, {{1, 1}, {1, -1}}));
}

TEST_CASE("random cocycles pass the triple check for every catalog group") {
  Rng rng(33);
  for (const auto& name : FiniteGroup::catalog()) {
    const FiniteGroup g = FiniteGroup::preset(name);
    for (const char* coeff : {"Qstar", "Qstar-sign", "Z12", "Z12-sign"}) {
      const CoefficientGroup a = CoefficientGroup::parse(coeff, g);
      const CoherentActionData d = random_cocycle(g, a, rng);
      const std::size_t n = g.order();
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element z = 0; z < n; ++z)
            CHECK(a.combine(a.act(z, d.phi(y, x)), d.phi(z, g.mul(y, x))) ==
                  a.combine(d.phi(z, y), d.phi(g.mul(z, y), x)));
    }
  }
}

TEST_CASE("Cayley graph frozen examples") {
  const CayleyGraph z2 = cayley_graph(FiniteGroup::cyclic(2));
  CHECK(z2.vertices == 2);
  CHECK(std::set<CayleyEdge>(z2.edges.begin(), z2.edges.end()) == std::set<CayleyEdge>{{0, 1, 1}, {1, 0, 1}});

  // Z3 with generator g = 1: edges v → g⁻¹v form a directed 3-cycle.
  const CayleyGraph z3 = cayley_graph(FiniteGroup::cyclic(3));
  CHECK(std::set<CayleyEdge>(z3.edges.begin(), z3.edges.end()) == std::set<CayleyEdge>{{0, 2, 1}, {2, 1, 1}, {1, 0, 1}});

  const FiniteGroup s3 = FiniteGroup::symmetric3();
  const CayleyGraph g = cayley_graph(s3);
  CHECK(g.vertices == 6);
  CHECK(g.edges.size() == 12);
  for (const auto& e : g.edges) CHECK(e.from == s3.mul(e.label, e.to));
}

TEST_CASE("spanning trees") {
  CHECK(spanning_tree(cayley_graph(FiniteGroup::cyclic(2))).edges == std::vector<CayleyEdge>{{0, 1, 1}});
  for (const auto& name : FiniteGroup::catalog()) {
    const FiniteGroup g = FiniteGroup::preset(name);
    const SpanningTree t = spanning_tree(cayley_graph(g));
    CHECK(t.edges.size() + 1 == g.order());
    // Each non-identity vertex is entered exactly once and its parent was reached earlier.
    std::set<Element> reached{0};
    for (const auto& e : t.edges) {
      CHECK(reached.count(e.from) == 1);
      CHECK(reached.insert(e.to).second);
    }
    CHECK(reached.size() == g.order());
  }
}

TEST_CASE("strictify: trivial data gives the identity system") {
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  const CoherentActionData d = trivial_action_data(s3, CoefficientGroup::rationals(s3));
  const CompatibleSystem f = strictify::strictify(d);
  for (const auto& row : f.f)
    for (const auto& v : row) CHECK(v == 1);
  CHECK(verify_compatibility(f, d));
}

TEST_CASE("strictify: hand-solved Z2 case") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const CoefficientGroup q = CoefficientGroup::rationals(z2);
  const Rational c = frac(3, 5);
  const CoherentActionData d(z2, q, {{1, 1}, {1, c}});
  // Compatibility at (g, g, h): F_e[h] = 1 = c · F_g[gh] · F_g[h], so F_g[e]·F_g[g] = 1/c.
  const CompatibleSystem f0 = strictify::strictify(d);
  CHECK(f0.f[1][1] == 1);
  CHECK(f0.f[1][0] == 1 / c);
  const Rational a = frac(-7, 2);
  const CompatibleSystem fa = strictify::strictify(d, {{CayleyEdge{0, 1, 1}, a}});
  CHECK(fa.f[1][1] == a);
  CHECK(fa.f[1][0] == 1 / (c * a));
  CHECK(fa.f[0] == std::vector<Rational>{1, 1});
  CHECK(verify_compatibility(fa, d));

  CHECK_THROWS_AS(strictify::strictify(d, {{CayleyEdge{1, 0, 1}, a}}), std::invalid_argument);
  CHECK_THROWS_AS(strictify::strictify(d, {{CayleyEdge{0, 1, 1}, Rational(0)}}), std::invalid_argument);
}

TEST_CASE("strictify: random Z3 data, perturbations and random systems") {
  Rng rng(37);
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  int random_rejected = 0;
  for (const char* coeff : {"Qstar", "Z5", "Z4-sign"}) {
    const CoefficientGroup a = CoefficientGroup::parse(coeff, z3);
    for (int trial = 0; trial < 30; ++trial) {
      const CoherentActionData d = random_cocycle(z3, a, rng);
      const TreeAssignment t = random_assignment(z3, a, rng);
      CompatibleSystem f = strictify::strictify(d, t);
      CHECK(verify_compatibility(f, d));
      for (const auto& [edge, value] : t) CHECK(f.f[edge.label][edge.to] == value);

      CompatibleSystem bad = f;
      bad.f[0][1] = a.combine(bad.f[0][1], a.kind() == CoefficientGroup::Kind::Rationals ? Rational(2) : Rational(1));
      CHECK_FALSE(verify_compatibility(bad, d));

      if (a.kind() == CoefficientGroup::Kind::Rationals) {
        CompatibleSystem r{std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(1)))};
        for (Element x = 1; x < 3; ++x)
          for (Element h = 0; h < 3; ++h) r.f[x][h] = a.random_element(rng);
        random_rejected += verify_compatibility(r, d) ? 0 : 1;
      }
    }
  }
  // Smoke test only: a random system is almost never compatible.
  CHECK(random_rejected > 25);
}

TEST_CASE("strict_action frozen examples") {
  Rng rng(39);
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  const CoefficientGroup a = CoefficientGroup::parse("Qstar-sign", z4);
  const CoherentActionData d = random_cocycle(z4, a, rng);
  const CompatibleSystem fx = strictify::strictify(d, random_assignment(z4, a, rng));
  const CompatibleSystem fy = strictify::strictify(d, random_assignment(z4, a, rng));
  CHECK(strict_action(0, frac(5, 3), fx, fy, d) == frac(5, 3));

  const CoherentActionData triv = trivial_action_data(z4, CoefficientGroup::rationals(z4));
  const CompatibleSystem id = strictify::strictify(triv);
  for (Element s = 0; s < 4; ++s) CHECK(strict_action(s, frac(5, 3), id, id, triv) == frac(5, 3));
  CHECK_THROWS_AS(strict_action(1, Rational(0), id, id, triv), std::invalid_argument);
}

TEST_CASE("strict action composes as a right action") {
  Rng rng(41);
  for (const char* name : {"Z4", "S3", "D4"}) {
    const FiniteGroup g = FiniteGroup::preset(name);
    for (const char* coeff : {"Qstar", "Qstar-sign", "Z12-sign"}) {
      const CoefficientGroup a = CoefficientGroup::parse(coeff, g);
      for (int trial = 0; trial < 5; ++trial) {
        const CoherentActionData d = random_cocycle(g, a, rng);
        const CompatibleSystem fx = strictify::strictify(d, random_assignment(g, a, rng));
        const CompatibleSystem fy = strictify::strictify(d, random_assignment(g, a, rng));
        const Rational phi = a.random_element(rng);
        for (Element s1 = 0; s1 < g.order(); ++s1) {
          // Φ·s₁ is a morphism X·s₁ → Y·s₁, whose systems are the shifted ones.
          const Rational once = strict_action(s1, phi, fx, fy, d);
          CHECK(verify_compatibility(shifted(fx, s1, g), d));
          for (Element s2 = 0; s2 < g.order(); ++s2) {
            const Rational twice = strict_action(s2, once, shifted(fx, s1, g), shifted(fy, s1, g), d);
            CHECK(twice == strict_action(g.mul(s2, s1), phi, fx, fy, d));
          }
        }
      }
    }
  }
}

TEST_CASE("average") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const RationalMatrix m{{1, 2}, {3, 4}}, n{{0, 1}, {frac(1, 3), 0}};
  CHECK(average(z2, {m, m}) == m);
  CHECK(average(z2, {m, n}) == frac(1, 2) * (m + n));
  CHECK_THROWS_AS(average(z2, {m, n}, 4), std::domain_error);
  CHECK_NOTHROW(average(z2, {m, n}, 7));
  CHECK_THROWS_AS(average(z2, {m}), std::invalid_argument);

  Rng rng(43);
  for (const char* name : {"S3", "D4", "Z5"}) {
    const FiniteGroup g = FiniteGroup::preset(name);
    RationalMatrix x(g.order(), g.order());
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t j = 0; j < g.order(); ++j) x(i, j) = frac(static_cast<long>(rng.uniform(-5, 5)), static_cast<long>(rng.uniform(1, 4)));
    std::vector<RationalMatrix> family;
    RationalMatrix sum(g.order(), g.order());
    for (Element e = 0; e < g.order(); ++e) {
      family.push_back(regular(g, e) * x * regular(g, e).transpose());
      sum = sum + family.back();
    }
    const RationalMatrix avg = average(g, family);
    CHECK(Rational(static_cast<long>(g.order())) * avg == sum);
    for (Element e = 0; e < g.order(); ++e) CHECK(regular(g, e) * avg * regular(g, e).transpose() == avg);
    CHECK(average(g, std::vector<RationalMatrix>(g.order(), avg)) == avg);
  }
}

TEST_CASE("idempotent repair") {
  const RationalMatrix q{{1, 0}, {0, 0}};
  CHECK(idempotent_fix(q) == q);
  const RationalMatrix t{{1, 0, 0}, {0, 0, 1}, {0, 0, 0}};
  CHECK(idempotent_fix(t) == RationalMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  CHECK_THROWS_AS(idempotent_fix(RationalMatrix{{2, 0}, {0, 0}}), std::domain_error);
  CHECK_THROWS_AS(idempotent_fix(RationalMatrix(2, 3)), std::invalid_argument);

  Rng rng(47);
  int nontrivial = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const RationalMatrix x = support::random_homotopy_idempotent(rng, static_cast<std::size_t>(rng.uniform(1, 6)));
    const RationalMatrix d = x * x - x;
    REQUIRE((d * d).is_zero());
    nontrivial += d.is_zero() ? 0 : 1;
    const RationalMatrix p = idempotent_fix(x);
    CHECK(p * p == p);
    if (d.is_zero()) CHECK(p == x);
  }
  CHECK(nontrivial > 40);
}
