#pragma once

// JSON forms of polynomials, polyominoes and labelled Dyck objects, plus the
// report shape shared by every verification check.

#include <string>
#include <vector>

#include "json.hpp"
#include "polyo/dyck.hpp"
#include "polyo/polyomino.hpp"
#include "polyo/qt_algebra.hpp"

namespace polyo {

using Json = nlohmann::ordered_json;

Json json_of(const QTPolynomial& p);
QTPolynomial polynomial_from_json(const Json& j);

Json json_of(const ReducedPolyomino& p);
Json json_of(const DecoratedPolyomino& p);
Json json_of(const LabelledPolyomino& p);
ReducedPolyomino polyomino_from_json(const Json& j);
DecoratedPolyomino decorated_from_json(const Json& j);
LabelledPolyomino labelled_from_json(const Json& j);

Json json_of(const PartiallyLabelledDyckPath& p);
Json json_of(const TwoCarParkingFunction& f);
PartiallyLabelledDyckPath pldp_from_json(const Json& j);
TwoCarParkingFunction pf2_from_json(const Json& j);

/// Outcome of one verification run. `checked` lists what was compared;
/// `counterexample` is null when everything matched.
struct CheckReport {
  std::string name;
  Json checked = Json::array();
  std::vector<std::string> failures;
  Json counterexample;

  bool equal() const { return failures.empty(); }
  void fail(std::string message, Json example);
  Json to_json() const;
};

}  // namespace polyo
