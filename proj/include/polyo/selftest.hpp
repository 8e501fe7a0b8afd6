#pragma once

// Regression suite pinned to the worked examples: the 12 x 7 area word, the
// bounce path example, the zeta example, the parking-function example and the
// labelled Dyck path / labelled polyomino pair.

#include <string>
#include <utility>
#include <vector>

#include "polyo/json_io.hpp"

namespace polyo {

struct PinnedExamples {
  std::string word_red, word_green, word_text;
  int word_area = 0;

  std::string bounce_red, bounce_green;
  std::vector<int> bounce_valleys;
  std::vector<std::pair<int, int>> bounce_corners;
  int bounce_value = 0, bounce_dec_value = 0, bounce_area = 0, bounce_s = 0;

  std::string zeta_word;
  std::vector<int> zeta_rises;

  std::vector<int> pf_area_word, pf_labels;
  std::string pf_image_word;

  std::vector<int> pldp_area_word, pldp_labels;
  std::string pldp_red, pldp_green;
  int pldp_area = 0;
};

PinnedExamples pinned_examples();

struct SelftestCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<SelftestCase> run_selftest(const PinnedExamples& examples = pinned_examples());
Json selftest_json(const std::vector<SelftestCase>& cases);

}  // namespace polyo
