#include "isotori/strictify.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>

namespace isotori::strictify {

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table, std::vector<Element> generators, std::string name)
    : table_(std::move(table)), generators_(std::move(generators)), name_(std::move(name)) {
  const std::size_t n = table_.size();
  if (n == 0) throw std::invalid_argument("group table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("group table must be square");
    for (auto x : row)
      if (x >= n) throw std::invalid_argument("group table entry out of range");
  }
  for (Element a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a) throw std::invalid_argument("element 0 is not the identity");

  inverse_.assign(n, n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) inverse_[a] = b;
  for (Element a = 0; a < n; ++a)
    if (inverse_[a] == n) throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("group table is not associative");

  if (generators_.empty()) throw std::invalid_argument("generator list is empty");
  for (auto g : generators_)
    if (g >= n) throw std::invalid_argument("generator out of range");
  std::vector<bool> seen(n, false);
  std::deque<Element> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const Element v = queue.front();
    queue.pop_front();
    for (auto g : generators_) {
      const Element w = table_[g][v];
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  if (count != n) throw std::invalid_argument("generators do not generate the group");
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::size_t>>& generators, std::string name) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  const std::size_t degree = generators.front().size();
  using Perm = std::vector<std::size_t>;
  auto compose = [](const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
    return r;
  };

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elements{id};
  std::map<Perm, Element> index{{id, 0}};
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (const auto& g : generators) {
      if (g.size() != degree) throw std::invalid_argument("permutations of different degree");
      Perm p = compose(g, elements[k]);
      if (index.emplace(p, elements.size()).second) elements.push_back(std::move(p));
    }

  const std::size_t n = elements.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[a][b] = index.at(compose(elements[a], elements[b]));
  std::vector<Element> gens;
  for (const auto& g : generators) gens.push_back(index.at(g));
  return FiniteGroup(std::move(table), std::move(gens), std::move(name));
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = (i + 1) % n;
  return from_permutations({shift}, "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric3() { return from_permutations({{1, 0, 2}, {1, 2, 0}}, "S3"); }

FiniteGroup FiniteGroup::dihedral4() { return from_permutations({{1, 2, 3, 0}, {0, 3, 2, 1}}, "D4"); }

FiniteGroup FiniteGroup::klein4() { return from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}}, "Z2xZ2"); }

namespace {

std::optional<std::int64_t> parse_positive(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v <= 0) return std::nullopt;
  return v;
}

}  // namespace

FiniteGroup FiniteGroup::preset(std::string_view name) {
  if (name == "S3") return symmetric3();
  if (name == "D4") return dihedral4();
  if (name == "Z2xZ2") return klein4();
  if (name.size() > 1 && name[0] == 'Z') {
    auto n = parse_positive(name.substr(1));
    if (n && *n <= 1000) return cyclic(static_cast<std::size_t>(*n));
  }
  throw std::invalid_argument("unknown group preset '" + std::string(name) + "' (expected Z<n>, S3, D4 or Z2xZ2)");
}

std::vector<std::string> FiniteGroup::catalog() {
  std::vector<std::string> names;
  for (int n = 1; n <= 12; ++n) names.push_back("Z" + std::to_string(n));
  names.insert(names.end(), {"S3", "D4", "Z2xZ2"});
  return names;
}

std::vector<int> sign_character(const FiniteGroup& g) {
  const std::size_t n = g.order(), k = g.generators().size();
  for (std::uint64_t mask = 1; k < 63 && mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> chi(n, 0);
    chi[0] = 1;
    std::deque<Element> queue{0};
    bool consistent = true;
    while (!queue.empty() && consistent) {
      const Element v = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < k; ++i) {
        const int s = (mask >> i) & 1U ? -1 : 1;
        const Element w = g.mul(g.generators()[i], v);
        if (chi[w] == 0) {
          chi[w] = s * chi[v];
          queue.push_back(w);
        } else if (chi[w] != s * chi[v]) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) return chi;
  }
  return std::vector<int>(n, 1);
}

CoefficientGroup::CoefficientGroup(Kind kind, std::int64_t modulus, std::vector<std::int64_t> action, std::string name)
    : kind_(kind), modulus_(modulus), action_(std::move(action)), name_(std::move(name)) {}

namespace {

void check_homomorphism(const FiniteGroup& g, const std::vector<std::int64_t>& action, std::int64_t modulus) {
  auto reduce = [&](std::int64_t x) { return modulus == 0 ? x : ((x % modulus) + modulus) % modulus; };
  if (action.size() != g.order()) throw std::invalid_argument("action must list one automorphism per group element");
  if (reduce(action[0]) != reduce(1)) throw std::invalid_argument("identity must act trivially");
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (reduce(action[g.mul(a, b)]) != reduce(action[a] * action[b]))
        throw std::invalid_argument("coefficient action is not a homomorphism");
}

}  // namespace

CoefficientGroup CoefficientGroup::rationals(const FiniteGroup& g, std::vector<int> exponents) {
  std::vector<std::int64_t> action(g.order(), 1);
  if (!exponents.empty()) {
    if (exponents.size() != g.order()) throw std::invalid_argument("action must list one automorphism per group element");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] != 1 && exponents[i] != -1) throw std::invalid_argument("Q* automorphism exponents must be +1 or -1");
      action[i] = exponents[i];
    }
  }
  check_homomorphism(g, action, 0);
  const bool trivial = std::all_of(action.begin(), action.end(), [](auto e) { return e == 1; });
  return CoefficientGroup(Kind::Rationals, 0, std::move(action), trivial ? "Qstar" : "Qstar-sign");
}

CoefficientGroup CoefficientGroup::cyclic(std::int64_t m, const FiniteGroup& g, std::vector<std::int64_t> multipliers) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  std::vector<std::int64_t> action(g.order(), 1 % m);
  if (!multipliers.empty()) {
    for (auto& u : multipliers) {
      u = ((u % m) + m) % m;
      if (std::gcd(u, m) != 1) throw std::invalid_argument("Z/m automorphism multipliers must be units");
    }
    action = std::move(multipliers);
  }
  check_homomorphism(g, action, m);
  const bool trivial = std::all_of(action.begin(), action.end(), [&](auto u) { return u == 1 % m; });
  return CoefficientGroup(Kind::Cyclic, m, std::move(action), "Z" + std::to_string(m) + (trivial ? "" : "-sign"));
}

CoefficientGroup CoefficientGroup::parse(std::string_view model, const FiniteGroup& g) {
  bool sign = false;
  if (model.size() > 5 && model.substr(model.size() - 5) == "-sign") {
    sign = true;
    model.remove_suffix(5);
  }
  const std::vector<int> chi = sign ? sign_character(g) : std::vector<int>{};
  if (model == "Qstar") return rationals(g, chi);
  if (model.size() > 1 && model[0] == 'Z') {
    if (auto m = parse_positive(model.substr(1))) {
      std::vector<std::int64_t> mult;
      for (int c : chi) mult.push_back(c == 1 ? 1 : *m - 1);
      return cyclic(*m, g, std::move(mult));
    }
  }
  throw std::invalid_argument("unknown coefficient model '" + std::string(model) + "' (expected Qstar, Z<m>, optional -sign)");
}

bool CoefficientGroup::trivial_action() const {
  return std::all_of(action_.begin(), action_.end(), [&](auto u) { return kind_ == Kind::Rationals ? u == 1 : u == 1 % modulus_; });
}

bool CoefficientGroup::contains(const Rational& a) const {
  if (kind_ == Kind::Rationals) return a != 0;
  return a.get_den() == 1 && a >= 0 && a < modulus_;
}

Rational CoefficientGroup::identity() const { return kind_ == Kind::Rationals ? Rational(1) : Rational(0); }

namespace {

Rational mod(const Rational& a, std::int64_t m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(m));
  return Rational(r);
}

}  // namespace

Rational CoefficientGroup::combine(const Rational& a, const Rational& b) const {
  return kind_ == Kind::Rationals ? Rational(a * b) : mod(a + b, modulus_);
}

Rational CoefficientGroup::invert(const Rational& a) const {
  return kind_ == Kind::Rationals ? Rational(1 / a) : mod(-a, modulus_);
}

Rational CoefficientGroup::act(Element g, const Rational& a) const {
  if (kind_ == Kind::Rationals) return action_[g] == 1 ? a : Rational(1 / a);
  return mod(Rational(action_[g]) * a, modulus_);
}

Rational CoefficientGroup::random_element(Rng& rng) const {
  if (kind_ == Kind::Rationals) return rng.nonzero_rational(9, 9);
  return Rational(static_cast<long>(rng.uniform(0, modulus_ - 1)));
}

CoherentActionData::CoherentActionData(FiniteGroup group, CoefficientGroup coeff, std::vector<std::vector<Rational>> phi)
    : group_(std::move(group)), coeff_(std::move(coeff)), phi_(std::move(phi)) {
  const std::size_t n = group_.order();
  if (phi_.size() != n) throw std::invalid_argument("phi must be indexed over G x G");
  for (const auto& row : phi_) {
    if (row.size() != n) throw std::invalid_argument("phi must be indexed over G x G");
    for (const auto& v : row)
      if (!coeff_.contains(v)) throw std::invalid_argument("phi value " + to_string(v) + " is not in the coefficient group");
  }
  const Rational id = coeff_.identity();
  for (Element g = 0; g < n; ++g)
    if (phi_[g][0] != id || phi_[0][g] != id) throw std::invalid_argument("phi must be the identity when either argument is e");
  for (Element g3 = 0; g3 < n; ++g3)
    for (Element g2 = 0; g2 < n; ++g2)
      for (Element g1 = 0; g1 < n; ++g1) {
        const Rational lhs = coeff_.combine(coeff_.act(g3, phi_[g2][g1]), phi_[g3][group_.mul(g2, g1)]);
        const Rational rhs = coeff_.combine(phi_[g3][g2], phi_[group_.mul(g3, g2)][g1]);
        if (lhs != rhs)
          throw std::invalid_argument("phi violates the coherence condition at (" + std::to_string(g3) + ", " +
                                      std::to_string(g2) + ", " + std::to_string(g1) + ")");
      }
}

CoherentActionData trivial_action_data(const FiniteGroup& g, const CoefficientGroup& a) {
  return CoherentActionData(g, a, std::vector<std::vector<Rational>>(g.order(), std::vector<Rational>(g.order(), a.identity())));
}

namespace {

// Homomorphism onto Z/k: powers of the single generator for cyclic groups,
// otherwise the sign character.
std::optional<std::pair<std::vector<std::size_t>, std::size_t>> cyclic_quotient(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return std::nullopt;
  if (g.generators().size() == 1) {
    std::vector<std::size_t> chi(n);
    Element x = 0;
    for (std::size_t k = 0; k < n; ++k) {
      chi[x] = k;
      x = g.mul(g.generators()[0], x);
    }
    return std::pair{std::move(chi), n};
  }
  const std::vector<int> sign = sign_character(g);
  if (std::all_of(sign.begin(), sign.end(), [](int s) { return s == 1; })) return std::nullopt;
  std::vector<std::size_t> chi(n);
  for (std::size_t i = 0; i < n; ++i) chi[i] = sign[i] == 1 ? 0 : 1;
  return std::pair{std::move(chi), std::size_t{2}};
}

Rational random_fixed_point(const FiniteGroup& g, const CoefficientGroup& a, Rng& rng) {
  if (a.trivial_action()) return a.random_element(rng);
  if (a.kind() == CoefficientGroup::Kind::Rationals) return rng.coin() ? Rational(-1) : Rational(1);
  std::vector<Rational> fixed;
  for (std::int64_t x = 0; x < std::min<std::int64_t>(a.modulus(), 100000); ++x) {
    const Rational v(static_cast<long>(x));
    bool ok = true;
    for (auto t : g.generators()) ok = ok && a.act(t, v) == v;
    if (ok) fixed.push_back(v);
  }
  return fixed[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(fixed.size()) - 1))];
}

}  // namespace

CoherentActionData random_cocycle(const FiniteGroup& g, const CoefficientGroup& a, Rng& rng) {
  const std::size_t n = g.order();
  std::vector<Rational> psi(n, a.identity());
  for (Element x = 1; x < n; ++x) psi[x] = a.random_element(rng);

  std::vector<std::vector<Rational>> phi(n, std::vector<Rational>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      phi[x][y] = a.combine(a.combine(a.act(x, psi[y]), a.invert(psi[g.mul(x, y)])), psi[x]);

  if (auto q = cyclic_quotient(g)) {
    const auto& [chi, k] = *q;
    const Rational c = random_fixed_point(g, a, rng);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (chi[x] + chi[y] >= k) phi[x][y] = a.combine(phi[x][y], c);
  }
  return CoherentActionData(g, a, std::move(phi));
}

CayleyGraph cayley_graph(const FiniteGroup& g) {
  CayleyGraph graph{g.order(), {}};
  for (Element v = 0; v < g.order(); ++v)
    for (auto t : g.generators()) graph.edges.push_back(CayleyEdge{v, g.mul(g.inverse(t), v), t});
  return graph;
}

SpanningTree spanning_tree(const CayleyGraph& graph) {
  std::vector<std::vector<const CayleyEdge*>> out(graph.vertices);
  for (const auto& e : graph.edges) out[e.from].push_back(&e);
  std::vector<bool> seen(graph.vertices, false);
  std::deque<Element> queue{0};
  seen[0] = true;
  SpanningTree tree;
  while (!queue.empty()) {
    const Element v = queue.front();
    queue.pop_front();
    for (const CayleyEdge* e : out[v]) {
      if (seen[e->to]) continue;
      seen[e->to] = true;
      tree.edges.push_back(*e);
      queue.push_back(e->to);
    }
  }
  if (tree.edges.size() + 1 != graph.vertices) throw std::logic_error("Cayley graph is not connected from the identity");
  return tree;
}

CompatibleSystem strictify(const CoherentActionData& data, const TreeAssignment& assignment) {
  const FiniteGroup& g = data.group();
  const CoefficientGroup& a = data.coeff();
  const std::size_t n = g.order();
  const SpanningTree tree = spanning_tree(cayley_graph(g));

  for (const auto& [edge, value] : assignment) {
    if (std::find(tree.edges.begin(), tree.edges.end(), edge) == tree.edges.end())
      throw std::invalid_argument("tree assignment names an edge outside the spanning tree");
    if (!a.contains(value)) throw std::invalid_argument("tree assignment value " + to_string(value) + " is not invertible");
  }

  // psi[x] = F_x[e]. On a tree edge p → c labelled t (p = t·c) compatibility at
  // (t, c) on component e reads psi[p] = φ(t,c) · t·psi[c] · F_t[c].
  std::vector<Rational> psi(n, a.identity());
  for (const auto& edge : tree.edges) {
    auto it = assignment.find(edge);
    const Rational value = it == assignment.end() ? a.identity() : it->second;
    const Rational rest = a.combine(a.combine(psi[edge.from], a.invert(value)), a.invert(data.phi(edge.label, edge.to)));
    psi[edge.to] = a.act(g.inverse(edge.label), rest);
  }

  CompatibleSystem sys{std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))};
  for (Element x = 0; x < n; ++x)
    for (Element h = 0; h < n; ++h)
      sys.f[x][h] = a.combine(a.combine(psi[g.mul(x, h)], a.invert(a.act(x, psi[h]))), a.invert(data.phi(x, h)));

  if (!verify_compatibility(sys, data)) throw std::logic_error("strictify: propagated system failed verification");
  for (const auto& edge : tree.edges) {
    auto it = assignment.find(edge);
    if (sys.f[edge.label][edge.to] != (it == assignment.end() ? a.identity() : it->second))
      throw std::logic_error("strictify: tree edge lost its assigned value");
  }
  return sys;
}

bool verify_compatibility(const CompatibleSystem& sys, const CoherentActionData& data) {
  const FiniteGroup& g = data.group();
  const CoefficientGroup& a = data.coeff();
  const std::size_t n = g.order();
  if (sys.f.size() != n) return false;
  for (const auto& row : sys.f) {
    if (row.size() != n) return false;
    for (const auto& v : row)
      if (!a.contains(v)) return false;
  }
  for (Element h = 0; h < n; ++h)
    if (sys.f[0][h] != a.identity()) return false;
  for (Element g1 = 0; g1 < n; ++g1)
    for (Element g0 = 0; g0 < n; ++g0)
      for (Element h = 0; h < n; ++h) {
        const Rational rhs =
            a.combine(a.combine(data.phi(g1, g0), a.act(g1, sys.f[g0][h])), sys.f[g1][g.mul(g0, h)]);
        if (sys.f[g.mul(g1, g0)][h] != rhs) return false;
      }
  return true;
}

CompatibleSystem shifted(const CompatibleSystem& f, Element s, const FiniteGroup& g) {
  CompatibleSystem r = f;
  for (Element x = 0; x < g.order(); ++x)
    for (Element h = 0; h < g.order(); ++h) r.f[x][h] = f.f[x][g.mul(h, s)];
  return r;
}

Rational strict_action(Element s, const Rational& phi_value, const CompatibleSystem& fx, const CompatibleSystem& fy,
                       const CoherentActionData& data) {
  const CoefficientGroup& a = data.coeff();
  if (!a.contains(phi_value)) throw std::invalid_argument("morphism value is not in the coefficient group");
  return a.combine(a.combine(a.invert(fy.f[s][0]), a.act(s, phi_value)), fx.f[s][0]);
}

RationalMatrix average(const FiniteGroup& g, const std::vector<RationalMatrix>& values, std::int64_t characteristic) {
  const auto n = static_cast<std::int64_t>(g.order());
  if (characteristic > 0 && std::gcd(n, characteristic) != 1)
    throw std::domain_error("|G| = " + std::to_string(n) + " is not invertible in characteristic " + std::to_string(characteristic));
  if (values.size() != g.order()) throw std::invalid_argument("average needs one value per group element");
  RationalMatrix sum = values.front();
  for (std::size_t i = 1; i < values.size(); ++i) sum = sum + values[i];
  return Rational(1, static_cast<unsigned long>(n)) * sum;
}

RationalMatrix idempotent_fix(const RationalMatrix& t) {
  if (!t.square()) throw std::invalid_argument("idempotent_fix: matrix must be square");
  const RationalMatrix t2 = t * t;
  const RationalMatrix d = t2 - t;
  if (!(d * d).is_zero()) throw std::domain_error("idempotent_fix: (t^2 - t)^2 != 0");
  const RationalMatrix p = Rational(3) * t2 - Rational(2) * (t2 * t);
  if (!(p * p == p)) throw std::logic_error("idempotent_fix: result is not idempotent");
  return p;
}

}  // namespace isotori::strictify
