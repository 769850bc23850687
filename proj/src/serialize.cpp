#include "isotori/serialize.hpp"

namespace isotori::io {

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const Integer& z) { return to_string(z); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array())
    throw std::invalid_argument("expected a matrix as a nonempty array of arrays");
  RationalMatrix m(j.size(), j.front().size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw std::invalid_argument("matrix rows have different lengths");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

IntMatrix int_matrix_from_json(const Json& j) {
  const RationalMatrix m = rational_matrix_from_json(j);
  if (!is_integral(m)) throw std::invalid_argument("expected an integer matrix");
  return to_integer(m);
}

Json to_json(const symptorus::SpecialIsogenousTorus& t) {
  Json factors = Json::array();
  for (const auto& f : t.factors()) {
    Json areas = Json::array();
    for (const auto& a : f.areas()) areas.push_back(to_json(a));
    factors.push_back(Json{{"areas", std::move(areas)}, {"l", f.l()}});
  }
  return Json{{"factors", std::move(factors)}};
}

symptorus::SpecialIsogenousTorus torus_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array())
    throw std::invalid_argument("torus JSON needs a \"factors\" array");
  std::vector<symptorus::SpecialIsogenyFactor> factors;
  for (const auto& f : j["factors"]) {
    if (!f.is_object() || !f.contains("areas") || !f["areas"].is_array())
      throw std::invalid_argument("each factor needs an \"areas\" array");
    std::vector<Rational> areas;
    for (const auto& a : f["areas"]) areas.push_back(rational_from_json(a));
    std::int64_t l = 1;
    if (f.contains("l")) {
      if (!f["l"].is_number_integer()) throw std::invalid_argument("factor \"l\" must be an integer");
      l = f["l"].get<std::int64_t>();
    }
    factors.emplace_back(std::move(areas), l);
  }
  return symptorus::SpecialIsogenousTorus(std::move(factors));
}

Json to_json(const analytic::NovikovScalar& x) {
  Json terms = Json::array();
  for (const auto& t : x.terms()) terms.push_back(Json{{"coeff", to_json(t.coeff)}, {"exp", to_json(t.exp)}});
  return terms;
}

analytic::NovikovScalar novikov_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("Novikov scalar must be an array of terms");
  std::vector<analytic::NovikovScalar::Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exp"))
      throw std::invalid_argument("Novikov term needs \"coeff\" and \"exp\"");
    terms.push_back({rational_from_json(t["coeff"]), rational_from_json(t["exp"])});
  }
  return analytic::NovikovScalar(std::move(terms));
}

Json to_json(const analytic::NovikovLattice& g) {
  return Json{{"rank", g.rank()}, {"valuation_matrix", to_json(g.valuation_matrix())}};
}

Json to_json(const analytic::AnalyticTorus& t) {
  Json j = to_json(t.lattice);
  j["polarization"] = t.polarization ? to_json(t.polarization->phi) : Json(nullptr);
  return j;
}

analytic::AnalyticTorus analytic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("valuation_matrix"))
    throw std::invalid_argument("analytic torus JSON needs \"valuation_matrix\"");
  analytic::NovikovLattice lattice(rational_matrix_from_json(j["valuation_matrix"]));
  if (j.contains("rank") && (!j["rank"].is_number_integer() || j["rank"].get<std::size_t>() != lattice.rank()))
    throw std::invalid_argument("\"rank\" does not match the valuation matrix");
  std::optional<analytic::Polarization> pol;
  if (j.contains("polarization") && !j["polarization"].is_null())
    pol = analytic::Polarization{int_matrix_from_json(j["polarization"])};
  return analytic::AnalyticTorus{std::move(lattice), std::move(pol)};
}

Json to_json(const congruence::DivisorChain& d) {
  Json a = Json::array();
  for (const auto& x : d.divisors()) a.push_back(to_json(x));
  return a;
}

Json to_json(const equivalence::ClassificationReport& r, bool with_witness) {
  Json j;
  j["symplectomorphic"] = r.symplectomorphic;
  j["derived_equivalent"] = r.derived_equivalent;
  j["divisors"] = Json::array({to_json(r.divisors_lhs), to_json(r.divisors_rhs)});
  j["witness"] = with_witness && r.witness ? to_json(r.witness->matrix()) : Json(nullptr);
  return j;
}

Json to_json(const equivalence::SheafDescriptor& d) {
  Json a = Json::array();
  for (const auto& f : d.factors) {
    if (const auto* lb = std::get_if<equivalence::DegreeZeroLineBundle>(&f))
      a.push_back(Json{{"kind", "line_bundle"}, {"b", to_json(lb->b)}});
    else
      a.push_back(Json{{"kind", "skyscraper"}, {"a", to_json(std::get<equivalence::SkyscraperPoint>(f).a)}});
  }
  return a;
}

Json to_json(const strictify::FiniteGroup& g) {
  Json j;
  if (!g.name().empty()) j["name"] = g.name();
  j["order"] = g.order();
  j["table"] = g.table();
  j["generators"] = g.generators();
  return j;
}

strictify::FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("table") || !j.contains("generators"))
    throw std::invalid_argument("group JSON needs \"table\" and \"generators\"");
  std::vector<std::vector<strictify::Element>> table;
  std::vector<strictify::Element> gens;
  try {
    table = j["table"].get<std::vector<std::vector<strictify::Element>>>();
    gens = j["generators"].get<std::vector<strictify::Element>>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument("group table and generators must be arrays of nonnegative integers");
  }
  if (j.contains("order") && (!j["order"].is_number_integer() || j["order"].get<std::size_t>() != table.size()))
    throw std::invalid_argument("\"order\" does not match the table");
  return strictify::FiniteGroup(std::move(table), std::move(gens), j.value("name", std::string{}));
}

}  // namespace isotori::io
