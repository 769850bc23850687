#pragma once

#include <json.hpp>

#include "isotori/equivalence.hpp"
#include "isotori/strictify.hpp"

namespace isotori::io {

using Json = nlohmann::ordered_json;

// Parsers throw std::invalid_argument with a message naming the bad field.

Json to_json(const Rational& q);
Json to_json(const Integer& z);
/// Accepts "p", "p/q" or a JSON integer.
Rational rational_from_json(const Json& j);

template <class T>
Json to_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix rational_matrix_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);

Json to_json(const symptorus::SpecialIsogenousTorus& t);
symptorus::SpecialIsogenousTorus torus_from_json(const Json& j);

Json to_json(const analytic::NovikovScalar& x);
analytic::NovikovScalar novikov_from_json(const Json& j);
Json to_json(const analytic::NovikovLattice& g);
Json to_json(const analytic::AnalyticTorus& t);
/// {"valuation_matrix": …} with optional "rank" (checked) and "polarization" (null or matrix).
analytic::AnalyticTorus analytic_from_json(const Json& j);

Json to_json(const congruence::DivisorChain& d);
Json to_json(const equivalence::ClassificationReport& r, bool with_witness);
Json to_json(const equivalence::SheafDescriptor& d);

Json to_json(const strictify::FiniteGroup& g);
strictify::FiniteGroup group_from_json(const Json& j);

}  // namespace isotori::io
