#pragma once

// Reduced parallelogram polyominoes: a red and a green lattice path from (0,0)
// to (m,n), red weakly above green. Their area-word encoding over the ordered
// alphabet 0 < 0̄ < 1 < 1̄ < ..., decorations, labels, and exhaustive
// enumeration.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyo {

class InvalidObject : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A letter of the alphabet 0 < 0̄ < 1 < 1̄ < ..., stored as its rank
/// code = 2*value + barred. The successor is code + 1.
struct Letter {
  int code = 0;

  static constexpr Letter make(int value, bool barred) { return Letter{2 * value + (barred ? 1 : 0)}; }
  constexpr int value() const { return code / 2; }
  constexpr bool barred() const { return (code & 1) != 0; }
  constexpr Letter succ() const { return Letter{code + 1}; }
  auto operator<=>(const Letter&) const = default;
};

using AreaWord = std::vector<Letter>;

// "0 0̄ 1 1̄" using a combining macron; parse_area_word also accepts "0'".
std::string to_string(const AreaWord& word);
AreaWord parse_area_word(std::string_view text);

/// Empty iff the word is a Dyck word over the alphabet starting with 0.
std::vector<std::string> validate_area_word(const AreaWord& word);

using Path = std::vector<std::uint8_t>;  // 1 = north, 0 = east

std::string path_to_string(const Path& path);
Path path_from_string(std::string_view text);

struct ReducedPolyomino {
  int m = 0;  // width
  int n = 0;  // height
  Path red;
  Path green;

  static ReducedPolyomino from_strings(std::string_view red, std::string_view green);
  auto operator<=>(const ReducedPolyomino&) const = default;
};

/// Column heights: red_top[x] is the height of the red east step in column x,
/// green_bottom[x] that of the green one.
std::vector<int> red_column_heights(const ReducedPolyomino& p);
std::vector<int> green_column_heights(const ReducedPolyomino& p);

struct DecoratedPolyomino {
  ReducedPolyomino base;
  std::vector<int> rise_decorations;    // 1-based area-word positions, sorted
  std::vector<int> valley_decorations;  // 1-based red step indices, sorted

  auto operator<=>(const DecoratedPolyomino&) const = default;
};

struct LabelledPolyomino {
  ReducedPolyomino base;
  int first_label = 1;
  std::map<int, int> step_labels;  // 1-based red north step index -> label

  auto operator<=>(const LabelledPolyomino&) const = default;
};

std::vector<std::string> validate(const ReducedPolyomino& p);
std::vector<std::string> validate(const DecoratedPolyomino& p);
std::vector<std::string> validate(const LabelledPolyomino& p);

AreaWord to_area_word(const ReducedPolyomino& p);
ReducedPolyomino from_area_word(const AreaWord& word);

/// 1-based positions i with word[i-1] barred and word[i] its successor; the
/// position points at the unbarred member.
std::vector<int> rises(const AreaWord& word);

/// 1-based red step indices i >= 2 with red[i] north and red[i-1] east.
std::vector<int> red_valleys(const ReducedPolyomino& p);

/// Row (y of the step's start) of a red north step.
int red_step_row(const ReducedPolyomino& p, int step);

/// Area-word positions come from red north steps (barred letters) and green
/// east steps (unbarred letters, after the initial 0).
struct StepRef {
  bool red = false;
  int step = 0;  // 1-based index into the path; 0 for the initial letter
  auto operator<=>(const StepRef&) const = default;
};
StepRef step_of_word_position(const ReducedPolyomino& p, int position);
int word_position_of_step(const ReducedPolyomino& p, StepRef ref);

/// Columns for label monotonicity: entry x lists the 1-based red north step
/// indices at abscissa x, bottom to top.
std::vector<std::vector<int>> red_columns(const ReducedPolyomino& p);

enum class DecorationKind { plain, bullet, star };

// Deterministic order: red path, then green path (east < north bitwise),
// then decoration set.
template <class Visitor>
void for_each_polyomino(int m, int n, Visitor&& visit);

std::vector<ReducedPolyomino> enumerate_plain(int m, int n);
std::vector<DecoratedPolyomino> enumerate_decorated(int m, int n, int k, DecorationKind kind);
/// Labellings with the given multiset of n+1 positive labels.
std::vector<LabelledPolyomino> enumerate_labelled(int m, int n, std::vector<int> content);

/// Calls visit(subset) for every k-subset of items, in lexicographic order.
template <class Visitor>
void for_each_subset(const std::vector<int>& items, int k, Visitor&& visit);

// ---------------------------------------------------------------------------

namespace detail {

template <class Visitor>
void visit_green(ReducedPolyomino& p, int i, int red_prefix, int green_prefix, int green_norths_left, Visitor& visit) {
  const int len = p.m + p.n;
  if (i == len) {
    visit(static_cast<const ReducedPolyomino&>(p));
    return;
  }
  const int remaining = len - i;
  const int red_after = red_prefix + p.red[i];
  // east
  if (remaining - 1 >= green_norths_left) {
    p.green[i] = 0;
    visit_green(p, i + 1, red_after, green_prefix, green_norths_left, visit);
  }
  // north
  if (green_norths_left > 0 && green_prefix + 1 <= red_after) {
    p.green[i] = 1;
    visit_green(p, i + 1, red_after, green_prefix + 1, green_norths_left - 1, visit);
  }
}

template <class Visitor>
void visit_red(ReducedPolyomino& p, int i, int norths_left, Visitor& visit) {
  const int len = p.m + p.n;
  if (i == len) {
    visit_green(p, 0, 0, 0, p.n, visit);
    return;
  }
  if (len - i - 1 >= norths_left) {
    p.red[i] = 0;
    visit_red(p, i + 1, norths_left, visit);
  }
  if (norths_left > 0) {
    p.red[i] = 1;
    visit_red(p, i + 1, norths_left - 1, visit);
  }
}

template <class Visitor>
void visit_subsets(const std::vector<int>& items, std::size_t start, int k, std::vector<int>& chosen, Visitor& visit) {
  if (k == 0) {
    visit(static_cast<const std::vector<int>&>(chosen));
    return;
  }
  for (std::size_t i = start; i + static_cast<std::size_t>(k) <= items.size(); ++i) {
    chosen.push_back(items[i]);
    visit_subsets(items, i + 1, k - 1, chosen, visit);
    chosen.pop_back();
  }
}

}  // namespace detail

template <class Visitor>
void for_each_polyomino(int m, int n, Visitor&& visit) {
  if (m < 0 || n < 0) return;
  ReducedPolyomino p;
  p.m = m;
  p.n = n;
  p.red.assign(static_cast<std::size_t>(m + n), 0);
  p.green.assign(static_cast<std::size_t>(m + n), 0);
  detail::visit_red(p, 0, n, visit);
}

template <class Visitor>
void for_each_subset(const std::vector<int>& items, int k, Visitor&& visit) {
  if (k < 0 || static_cast<std::size_t>(k) > items.size()) return;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  detail::visit_subsets(items, 0, k, chosen, visit);
}

}  // namespace polyo
