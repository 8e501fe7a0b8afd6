#include "polyo/selftest.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <type_traits>

#include "polyo/bijections.hpp"
#include "polyo/statistics.hpp"

namespace polyo {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "[" + out + "]";
}

// Runs one case; any exception counts as a failure with its message.
SelftestCase run_case(const std::string& name, const std::function<std::string()>& body) {
  try {
    const std::string problem = body();
    return {name, problem.empty(), problem.empty() ? "ok" : problem};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

template <class T>
std::string expect(const std::string& what, const T& got, const T& want) {
  if (got == want) return {};
  if constexpr (std::is_same_v<T, std::string>) return what + ": got " + got + ", want " + want;
  else if constexpr (std::is_same_v<T, int>) return what + ": got " + std::to_string(got) + ", want " + std::to_string(want);
  else return what + " differs";
}

}  // namespace

PinnedExamples pinned_examples() {
  PinnedExamples f;
  f.word_red = "NNNEEENEENEEENNEEEE";
  f.word_green = "EEENEENNEENEEENEENN";
  f.word_text = "0 0̄ 1 1̄ 2 2̄ 3 2 2 2̄ 1 1̄ 2 1 1 1̄ 2 2̄ 2 2";
  f.word_area = 30;

  f.bounce_red = "NNNEEENEENEEENEEEEN";
  f.bounce_green = "EENNNEEEEENEEENEENN";
  f.bounce_valleys = {10, 14};
  f.bounce_corners = {{0, 0}, {0, 3}, {7, 3}, {7, 5}, {12, 5}, {12, 7}};
  f.bounce_value = 11;
  f.bounce_dec_value = 8;
  f.bounce_area = 19;
  f.bounce_s = 4;

  f.zeta_word = "0 0̄ 0̄ 0 0 0 0̄ 1 1̄ 2 1̄ 1̄ 0̄ 0̄ 1 1̄ 1̄ 2 0̄ 0̄";
  f.zeta_rises = {10, 15};

  f.pf_area_word = {0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0};
  f.pf_labels = {1, 1, 2, 2, 1, 1, 1, 2, 1, 2, 1};
  f.pf_image_word = "0 0̄ 0̄ 1 1 1̄ 1̄ 1̄ 1 0̄ 0 0̄";

  f.pldp_area_word = {0, 1, 2, 1, 2, 3, 4, 4, 1, 2, 0, 1};
  f.pldp_labels = {1, 2, 4, 0, 5, 7, 8, 0, 0, 3, 0, 6};
  f.pldp_red = "NNENNNEENEN";
  f.pldp_green = "NEENNNENNEN";
  f.pldp_area = 6;
  return f;
}

std::vector<SelftestCase> run_selftest(const PinnedExamples& f) {
  std::vector<SelftestCase> cases;

  cases.push_back(run_case("area-word", [&] {
    const auto p = ReducedPolyomino::from_strings(f.word_red, f.word_green);
    const AreaWord w = to_area_word(p);
    if (auto e = expect("area word", to_string(w), f.word_text); !e.empty()) return e;
    if (auto e = expect("letter sum", area(w), f.word_area); !e.empty()) return e;
    if (auto e = expect("cell count", cell_area(p), f.word_area); !e.empty()) return e;
    return expect("decoded paths", from_area_word(parse_area_word(f.word_text)) == p, true);
  }));

  cases.push_back(run_case("bounce-path", [&] {
    const auto p = ReducedPolyomino::from_strings(f.bounce_red, f.bounce_green);
    if (auto e = expect("corners", bounce_path(p).corners() == f.bounce_corners, true); !e.empty()) return e;
    if (auto e = expect("bounce", bounce(p), f.bounce_value); !e.empty()) return e;
    if (auto e = expect("underlined bounce", bounce_dec(p, f.bounce_valleys), f.bounce_dec_value); !e.empty()) return e;
    if (auto e = expect("area", cell_area(p), f.bounce_area); !e.empty()) return e;
    return expect("s", zero_count_bullet(p) + 1, f.bounce_s);
  }));

  cases.push_back(run_case("zeta-example", [&] {
    const DecoratedPolyomino p{ReducedPolyomino::from_strings(f.bounce_red, f.bounce_green), {}, f.bounce_valleys};
    const auto image = zeta(p);
    if (auto e = expect("image word", to_string(to_area_word(image.base)), f.zeta_word); !e.empty()) return e;
    if (image.rise_decorations != f.zeta_rises)
      return "decorated rises: got " + join(image.rise_decorations) + ", want " + join(f.zeta_rises);
    return expect("inverse", zeta_inverse(image) == p, true);
  }));

  cases.push_back(run_case("parking-function", [&] {
    const TwoCarParkingFunction pf{dyck_path_from_area_word(f.pf_area_word), f.pf_labels, {}};
    const auto image = pf2_to_polyomino(pf);
    if (auto e = expect("image word", to_string(to_area_word(image.base)), f.pf_image_word); !e.empty()) return e;
    const auto st = pf2_stats(pf);
    const AreaWord w = to_area_word(image.base);
    if (auto e = expect("dinv", dinv(w), st.dinv); !e.empty()) return e;
    if (auto e = expect("area", area(w), st.underlined_area); !e.empty()) return e;
    return expect("inverse", pf2_from_polyomino(image) == pf, true);
  }));

  cases.push_back(run_case("labelled-polyomino", [&] {
    const Path path = dyck_path_from_area_word(f.pldp_area_word);
    const PartiallyLabelledDyckPath p{path, f.pldp_labels, dyck_rises(path)};
    const auto image = pldp_to_labelled_polyomino(p);
    if (auto e = expect("red path", path_to_string(image.base.red), f.pldp_red); !e.empty()) return e;
    if (auto e = expect("green path", path_to_string(image.base.green), f.pldp_green); !e.empty()) return e;
    if (auto e = expect("underlined area", underlined_area(p), f.pldp_area); !e.empty()) return e;
    if (auto e = expect("image area", cell_area(image.base), f.pldp_area); !e.empty()) return e;
    return expect("inverse", pldp_from_labelled_polyomino(image) == p, true);
  }));

  return cases;
}

Json selftest_json(const std::vector<SelftestCase>& cases) {
  Json list = Json::array();
  bool all = true;
  for (const auto& c : cases) {
    list.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    all = all && c.passed;
  }
  return Json{{"passed", all}, {"cases", list}};
}

}  // namespace polyo
