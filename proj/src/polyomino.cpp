#include "polyo/polyomino.hpp"

#include <algorithm>
#include <sstream>

namespace polyo {

namespace {

constexpr std::string_view kMacron = "\xCC\x84";  // U+0304 combining macron

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

void require_valid(const std::vector<std::string>& errors) {
  if (!errors.empty()) throw InvalidObject(join(errors));
}

bool is_sorted_unique(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), [](int a, int b) { return a >= b; }) == v.end();
}

}  // namespace

std::string to_string(const AreaWord& word) {
  std::string out;
  for (const auto& letter : word) {
    if (!out.empty()) out += ' ';
    out += std::to_string(letter.value());
    if (letter.barred()) out += kMacron;
  }
  return out;
}

AreaWord parse_area_word(std::string_view text) {
  AreaWord word;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] < '0' || text[i] > '9') throw InvalidObject("unexpected character in area word: " + std::string(text));
    int value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') value = 10 * value + (text[i++] - '0');
    bool barred = false;
    if (i < text.size() && text[i] == '\'') {
      barred = true;
      ++i;
    } else if (text.substr(i, kMacron.size()) == kMacron) {
      barred = true;
      i += kMacron.size();
    }
    word.push_back(Letter::make(value, barred));
  }
  return word;
}

std::vector<std::string> validate_area_word(const AreaWord& word) {
  std::vector<std::string> errors;
  if (word.empty()) {
    errors.emplace_back("empty area word");
    return errors;
  }
  if (word.front().code != 0) errors.emplace_back("position 1: area word must start with 0");
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word[i].code < 0 || word[i] > word[i - 1].succ()) {
      errors.push_back("position " + std::to_string(i + 1) + ": letter exceeds the successor of its left neighbour");
      break;
    }
  }
  return errors;
}

std::string path_to_string(const Path& path) {
  std::string s;
  s.reserve(path.size());
  for (auto b : path) s += b ? 'N' : 'E';
  return s;
}

Path path_from_string(std::string_view text) {
  Path p;
  p.reserve(text.size());
  for (char c : text) {
    if (c == 'N' || c == 'n') p.push_back(1);
    else if (c == 'E' || c == 'e') p.push_back(0);
    else throw InvalidObject("path strings use only N and E: " + std::string(text));
  }
  return p;
}

ReducedPolyomino ReducedPolyomino::from_strings(std::string_view red, std::string_view green) {
  ReducedPolyomino p;
  p.red = path_from_string(red);
  p.green = path_from_string(green);
  p.n = static_cast<int>(std::count(p.red.begin(), p.red.end(), 1));
  p.m = static_cast<int>(p.red.size()) - p.n;
  require_valid(validate(p));
  return p;
}

std::vector<std::string> validate(const ReducedPolyomino& p) {
  std::vector<std::string> errors;
  const auto len = static_cast<std::size_t>(p.m + p.n);
  if (p.m < 0 || p.n < 0) {
    errors.emplace_back("negative dimensions");
    return errors;
  }
  if (p.red.size() != len || p.green.size() != len) {
    errors.push_back("paths must have length m+n = " + std::to_string(len));
    return errors;
  }
  int r = 0, g = 0;
  bool dominance_reported = false;
  for (std::size_t i = 0; i < len; ++i) {
    if (p.red[i] > 1 || p.green[i] > 1) {
      errors.push_back("step " + std::to_string(i + 1) + ": steps must be 0 or 1");
      return errors;
    }
    r += p.red[i];
    g += p.green[i];
    if (g > r && !dominance_reported) {
      errors.push_back("dominance violation at prefix " + std::to_string(i + 1));
      dominance_reported = true;
    }
  }
  if (r != p.n) errors.push_back("red path has " + std::to_string(r) + " north steps, expected " + std::to_string(p.n));
  if (g != p.n)
    errors.push_back("green path has " + std::to_string(g) + " north steps, expected " + std::to_string(p.n));
  return errors;
}

std::vector<std::string> validate(const DecoratedPolyomino& d) {
  auto errors = validate(d.base);
  if (!errors.empty()) return errors;
  if (!d.rise_decorations.empty() && !d.valley_decorations.empty())
    errors.emplace_back("rise and valley decorations cannot be mixed");
  if (!is_sorted_unique(d.rise_decorations)) errors.emplace_back("rise decorations must be sorted and distinct");
  if (!is_sorted_unique(d.valley_decorations)) errors.emplace_back("valley decorations must be sorted and distinct");
  const auto word_rises = rises(to_area_word(d.base));
  for (int pos : d.rise_decorations)
    if (!std::binary_search(word_rises.begin(), word_rises.end(), pos))
      errors.push_back("position " + std::to_string(pos) + " is not a rise");
  const auto valleys = red_valleys(d.base);
  for (int step : d.valley_decorations)
    if (!std::binary_search(valleys.begin(), valleys.end(), step))
      errors.push_back("red step " + std::to_string(step) + " is not a valley");
  return errors;
}

std::vector<std::string> validate(const LabelledPolyomino& l) {
  auto errors = validate(l.base);
  if (!errors.empty()) return errors;
  if (l.first_label < 1) errors.emplace_back("first label must be positive");
  std::vector<int> norths;
  for (int i = 0; i < l.base.m + l.base.n; ++i)
    if (l.base.red[i]) norths.push_back(i + 1);
  if (l.step_labels.size() != norths.size()) errors.emplace_back("every red north step needs exactly one label");
  for (int step : norths)
    if (!l.step_labels.count(step)) errors.push_back("red step " + std::to_string(step) + " is unlabelled");
  for (const auto& [step, label] : l.step_labels) {
    if (step < 1 || step > l.base.m + l.base.n || !l.base.red[step - 1])
      errors.push_back("label attached to non-north red step " + std::to_string(step));
    if (label < 1) errors.push_back("label on red step " + std::to_string(step) + " must be positive");
  }
  if (!errors.empty()) return errors;
  const auto columns = red_columns(l.base);
  for (std::size_t x = 0; x < columns.size(); ++x) {
    int previous = x == 0 ? l.first_label : 0;
    for (int step : columns[x]) {
      const int label = l.step_labels.at(step);
      if (label <= previous) {
        errors.push_back("labels not strictly increasing in column " + std::to_string(x));
        break;
      }
      previous = label;
    }
  }
  return errors;
}

std::vector<int> red_column_heights(const ReducedPolyomino& p) {
  std::vector<int> heights;
  int y = 0;
  for (auto step : p.red) {
    if (step) ++y;
    else heights.push_back(y);
  }
  return heights;
}

std::vector<int> green_column_heights(const ReducedPolyomino& p) {
  std::vector<int> heights;
  int y = 0;
  for (auto step : p.green) {
    if (step) ++y;
    else heights.push_back(y);
  }
  return heights;
}

AreaWord to_area_word(const ReducedPolyomino& p) {
  require_valid(validate(p));
  AreaWord word;
  word.reserve(static_cast<std::size_t>(p.m + p.n + 1));
  // Walk D = (1, r1, 1-g1, ..., r_{m+n}, 1-g_{m+n}, 0); an up-step reaching
  // height h emits the letter of rank h-1.
  int h = 1;
  word.push_back(Letter{0});
  for (int i = 0; i < p.m + p.n; ++i) {
    if (p.red[i]) {
      ++h;
      word.push_back(Letter{h - 1});
    } else {
      --h;
    }
    if (!p.green[i]) {
      ++h;
      word.push_back(Letter{h - 1});
    } else {
      --h;
    }
  }
  return word;
}

ReducedPolyomino from_area_word(const AreaWord& word) {
  require_valid(validate_area_word(word));
  std::vector<std::uint8_t> d;
  int h = 0;
  for (const auto& letter : word) {
    const int target = letter.code + 1;
    while (h > target - 1) {
      d.push_back(0);
      --h;
    }
    d.push_back(1);
    ++h;
  }
  while (h > 0) {
    d.push_back(0);
    --h;
  }
  ReducedPolyomino p;
  const std::size_t len = (d.size() - 2) / 2;
  p.red.resize(len);
  p.green.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    p.red[i] = d[2 * i + 1];
    p.green[i] = static_cast<std::uint8_t>(1 - d[2 * i + 2]);
  }
  p.n = static_cast<int>(std::count(p.red.begin(), p.red.end(), 1));
  p.m = static_cast<int>(len) - p.n;
  require_valid(validate(p));
  return p;
}

std::vector<int> rises(const AreaWord& word) {
  std::vector<int> out;
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i - 1].barred() && word[i] == word[i - 1].succ()) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> red_valleys(const ReducedPolyomino& p) {
  std::vector<int> out;
  for (std::size_t i = 1; i < p.red.size(); ++i)
    if (p.red[i] && !p.red[i - 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

int red_step_row(const ReducedPolyomino& p, int step) {
  if (step < 1 || step > static_cast<int>(p.red.size()) || !p.red[step - 1])
    throw InvalidObject("red step " + std::to_string(step) + " is not a north step");
  return static_cast<int>(std::count(p.red.begin(), p.red.begin() + (step - 1), 1));
}

StepRef step_of_word_position(const ReducedPolyomino& p, int position) {
  if (position == 1) return StepRef{false, 0};
  int pos = 1;
  for (int i = 0; i < p.m + p.n; ++i) {
    if (p.red[i] && ++pos == position) return StepRef{true, i + 1};
    if (!p.green[i] && ++pos == position) return StepRef{false, i + 1};
  }
  throw InvalidObject("area-word position " + std::to_string(position) + " out of range");
}

int word_position_of_step(const ReducedPolyomino& p, StepRef ref) {
  if (!ref.red && ref.step == 0) return 1;
  int pos = 1;
  for (int i = 0; i < p.m + p.n; ++i) {
    if (p.red[i]) {
      ++pos;
      if (ref.red && ref.step == i + 1) return pos;
    }
    if (!p.green[i]) {
      ++pos;
      if (!ref.red && ref.step == i + 1) return pos;
    }
  }
  throw InvalidObject("step does not emit an area-word letter");
}

std::vector<std::vector<int>> red_columns(const ReducedPolyomino& p) {
  std::vector<std::vector<int>> columns(static_cast<std::size_t>(p.m) + 1);
  int x = 0;
  for (int i = 0; i < p.m + p.n; ++i) {
    if (p.red[i]) columns[x].push_back(i + 1);
    else ++x;
  }
  return columns;
}

std::vector<ReducedPolyomino> enumerate_plain(int m, int n) {
  std::vector<ReducedPolyomino> out;
  for_each_polyomino(m, n, [&](const ReducedPolyomino& p) { out.push_back(p); });
  return out;
}

std::vector<DecoratedPolyomino> enumerate_decorated(int m, int n, int k, DecorationKind kind) {
  std::vector<DecoratedPolyomino> out;
  if (k < 0) return out;
  if (kind == DecorationKind::plain && k != 0) return out;
  for_each_polyomino(m, n, [&](const ReducedPolyomino& p) {
    if (kind == DecorationKind::plain) {
      out.push_back(DecoratedPolyomino{p, {}, {}});
      return;
    }
    const auto targets = kind == DecorationKind::bullet ? red_valleys(p) : rises(to_area_word(p));
    for_each_subset(targets, k, [&](const std::vector<int>& chosen) {
      DecoratedPolyomino d{p, {}, {}};
      (kind == DecorationKind::bullet ? d.valley_decorations : d.rise_decorations) = chosen;
      out.push_back(std::move(d));
    });
  });
  return out;
}

std::vector<LabelledPolyomino> enumerate_labelled(int m, int n, std::vector<int> content) {
  std::vector<LabelledPolyomino> out;
  if (static_cast<int>(content.size()) != n + 1) return out;
  if (std::any_of(content.begin(), content.end(), [](int l) { return l < 1; })) return out;
  std::sort(content.begin(), content.end());
  for_each_polyomino(m, n, [&](const ReducedPolyomino& p) {
    const auto columns = red_columns(p);
    std::vector<int> slots;  // red north steps in path order
    for (const auto& col : columns) slots.insert(slots.end(), col.begin(), col.end());
    std::vector<int> labels = content;
    do {
      // labels[0] is first_label; labels[1 + j] goes on slots[j].
      bool ok = true;
      std::size_t next = 1;
      for (std::size_t x = 0; x < columns.size() && ok; ++x) {
        int previous = x == 0 ? labels[0] : 0;
        for (std::size_t j = 0; j < columns[x].size(); ++j, ++next) {
          if (labels[next] <= previous) {
            ok = false;
            break;
          }
          previous = labels[next];
        }
      }
      if (!ok) continue;
      LabelledPolyomino l{p, labels[0], {}};
      for (std::size_t j = 0; j < slots.size(); ++j) l.step_labels.emplace(slots[j], labels[j + 1]);
      out.push_back(std::move(l));
    } while (std::next_permutation(labels.begin(), labels.end()));
  });
  return out;
}

}  // namespace polyo
