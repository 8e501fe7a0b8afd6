#include "polyo/json_io.hpp"

namespace polyo {

namespace {

std::vector<int> int_list(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<int>>();
}

}  // namespace

Json json_of(const QTPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.canonical_terms()) terms.push_back({{"q", e.q}, {"t", e.t}, {"c", c.get_str()}});
  return Json{{"terms", terms}};
}

QTPolynomial polynomial_from_json(const Json& j) {
  QTPolynomial p;
  for (const auto& term : j.at("terms")) {
    const auto& c = term.at("c");
    const BigInt coeff = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long>());
    p.add_term(term.at("q").get<int>(), term.at("t").get<int>(), coeff);
  }
  return p;
}

Json json_of(const ReducedPolyomino& p) {
  return Json{{"m", p.m}, {"n", p.n}, {"red", path_to_string(p.red)}, {"green", path_to_string(p.green)}};
}

Json json_of(const DecoratedPolyomino& p) {
  Json j = json_of(p.base);
  if (!p.rise_decorations.empty()) j["rise_dec"] = p.rise_decorations;
  if (!p.valley_decorations.empty()) j["valley_dec"] = p.valley_decorations;
  return j;
}

Json json_of(const LabelledPolyomino& p) {
  Json j = json_of(p.base);
  Json steps = Json::object();
  for (const auto& [step, label] : p.step_labels) steps[std::to_string(step)] = label;
  j["labels"] = Json{{"first", p.first_label}, {"steps", steps}};
  return j;
}

ReducedPolyomino polyomino_from_json(const Json& j) {
  auto p = ReducedPolyomino::from_strings(j.at("red").get<std::string>(), j.at("green").get<std::string>());
  if (j.contains("m") && j.at("m").get<int>() != p.m) throw InvalidObject("\"m\" disagrees with the paths");
  if (j.contains("n") && j.at("n").get<int>() != p.n) throw InvalidObject("\"n\" disagrees with the paths");
  return p;
}

DecoratedPolyomino decorated_from_json(const Json& j) {
  return DecoratedPolyomino{polyomino_from_json(j), int_list(j, "rise_dec"), int_list(j, "valley_dec")};
}

LabelledPolyomino labelled_from_json(const Json& j) {
  LabelledPolyomino l;
  l.base = polyomino_from_json(j);
  const auto& labels = j.at("labels");
  l.first_label = labels.at("first").get<int>();
  for (const auto& [key, value] : labels.at("steps").items()) l.step_labels.emplace(std::stoi(key), value.get<int>());
  return l;
}

Json json_of(const PartiallyLabelledDyckPath& p) {
  return Json{{"path", path_to_string(p.path)}, {"labels", p.labels}, {"dec_rises", p.decorated_rises}};
}

Json json_of(const TwoCarParkingFunction& f) {
  return Json{{"path", path_to_string(f.path)}, {"labels", f.labels}, {"dec_rises", f.decorated_rises}};
}

PartiallyLabelledDyckPath pldp_from_json(const Json& j) {
  return PartiallyLabelledDyckPath{path_from_string(j.at("path").get<std::string>()), int_list(j, "labels"),
                                   int_list(j, "dec_rises")};
}

TwoCarParkingFunction pf2_from_json(const Json& j) {
  return TwoCarParkingFunction{path_from_string(j.at("path").get<std::string>()), int_list(j, "labels"),
                               int_list(j, "dec_rises")};
}

void CheckReport::fail(std::string message, Json example) {
  if (failures.empty()) counterexample = std::move(example);
  failures.push_back(std::move(message));
}

Json CheckReport::to_json() const {
  Json j{{"check", name}, {"checked", checked}, {"equal", equal()}};
  j["failures"] = failures;
  j["counterexample"] = counterexample;
  return j;
}

}  // namespace polyo
