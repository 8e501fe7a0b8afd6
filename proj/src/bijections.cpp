#include "polyo/bijections.hpp"

#include <algorithm>

#include "polyo/statistics.hpp"

namespace polyo {

namespace {

void require_valid(const std::vector<std::string>& errors, const char* what) {
  if (errors.empty()) return;
  std::string joined = what;
  for (const auto& e : errors) joined += (joined == what ? ": " : "; ") + e;
  throw InvalidObject(joined);
}

struct Tagged {
  Letter letter;
  bool marked = false;
};

std::vector<Tagged> assemble_tagged(const std::vector<std::vector<Tagged>>& levels) {
  if (levels.empty()) return {};
  std::vector<Tagged> word = levels[0];
  for (std::size_t c = 1; c < levels.size(); ++c) {
    const Letter low{static_cast<int>(c)};
    const Letter high = low.succ();
    // Blocks of high letters, keyed by how many low letters precede them.
    std::vector<std::vector<Tagged>> blocks(1);
    for (const auto& t : levels[c]) {
      if (t.letter == low) blocks.emplace_back();
      else if (t.letter == high) blocks.back().push_back(t);
      else throw InvalidObject("interlacing level " + std::to_string(c) + " holds a foreign letter");
    }
    if (!blocks[0].empty()) throw InvalidObject("interlacing level " + std::to_string(c) + " starts with its higher letter");
    std::vector<Tagged> next;
    next.reserve(word.size() + levels[c].size());
    std::size_t seen = 0;
    for (const auto& t : word) {
      next.push_back(t);
      if (t.letter == low) {
        if (++seen >= blocks.size()) throw InvalidObject("interlacing level " + std::to_string(c) + " has too few letters");
        next.insert(next.end(), blocks[seen].begin(), blocks[seen].end());
      }
    }
    if (seen + 1 != blocks.size()) throw InvalidObject("interlacing level " + std::to_string(c) + " does not match the word");
    word = std::move(next);
  }
  return word;
}

// Number of earlier letters equal to word[i].
int occurrence(const AreaWord& word, std::size_t i) {
  return static_cast<int>(std::count(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i), word[i]));
}

}  // namespace

std::vector<AreaWord> interlacings(const AreaWord& word) {
  int top = 0;
  for (const auto& l : word) top = std::max(top, l.code);
  std::vector<AreaWord> levels(word.empty() ? 0 : static_cast<std::size_t>(top) + 1);
  for (const auto& l : word) {
    levels[l.code].push_back(l);
    if (l.code > 0) levels[l.code - 1].push_back(l);
  }
  return levels;
}

AreaWord assemble_from_interlacings(const std::vector<AreaWord>& levels) {
  std::vector<std::vector<Tagged>> tagged;
  for (const auto& level : levels) {
    auto& out = tagged.emplace_back();
    for (const auto& l : level) out.push_back({l, false});
  }
  AreaWord word;
  for (const auto& t : assemble_tagged(tagged)) word.push_back(t.letter);
  return word;
}

// Level c pairs bounce runs c and c+1 and reads the path between their outer
// endpoints: green for even c (north = c, east = c+1), red for odd c (east = c,
// north = c+1). Level 0 additionally carries the artificial leading 0.
DecoratedPolyomino zeta(const DecoratedPolyomino& p) {
  require_valid(validate(p), "zeta");
  if (!p.rise_decorations.empty()) throw InvalidObject("zeta expects valley decorations only");
  const auto& base = p.base;
  const auto runs = bounce_path(base).run_lengths();
  const auto corners_of_runs = [&] {
    // start point of every run
    std::vector<std::pair<int, int>> starts;
    int x = 0, y = 0;
    for (std::size_t c = 0; c < runs.size(); ++c) {
      starts.emplace_back(x, y);
      (c % 2 == 0 ? y : x) += runs[c];
    }
    return starts;
  }();

  // Index of the first step of each path leaving lattice point (x,y), found by
  // walking; paths are short so a linear scan is fine.
  const auto step_index_at = [&](const Path& path, int tx, int ty) {
    int x = 0, y = 0;
    for (std::size_t i = 0; i <= path.size(); ++i) {
      if (x == tx && y == ty) return i;
      if (i == path.size()) break;
      (path[i] ? y : x)++;
    }
    throw InvalidObject("bounce point is not on the path");
  };

  std::vector<std::vector<Tagged>> levels(runs.size());
  for (std::size_t c = 0; c < runs.size(); ++c) {
    const bool green = c % 2 == 0;
    const Path& path = green ? base.green : base.red;
    const Letter low{static_cast<int>(c)};
    const int length = runs[c] + (c + 1 < runs.size() ? runs[c + 1] : 0);
    auto& level = levels[c];
    if (c == 0) level.push_back({Letter{0}, false});
    std::size_t i = step_index_at(path, corners_of_runs[c].first, corners_of_runs[c].second);
    for (int j = 0; j < length; ++j, ++i) {
      const bool north = path.at(i) != 0;
      const bool is_low = green ? north : !north;
      bool marked = false;
      if (!green && north)
        marked = std::binary_search(p.valley_decorations.begin(), p.valley_decorations.end(), static_cast<int>(i) + 1);
      level.push_back({is_low ? low : low.succ(), marked});
    }
  }

  const auto tagged = assemble_tagged(levels);
  AreaWord word;
  DecoratedPolyomino out;
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    word.push_back(tagged[i].letter);
    if (tagged[i].marked) out.rise_decorations.push_back(static_cast<int>(i) + 1);
  }
  out.base = from_area_word(word);
  require_valid(validate(out), "zeta produced an invalid image");
  return out;
}

DecoratedPolyomino zeta_inverse(const DecoratedPolyomino& q) {
  require_valid(validate(q), "zeta_inverse");
  if (!q.valley_decorations.empty()) throw InvalidObject("zeta_inverse expects rise decorations only");
  const AreaWord word = to_area_word(q.base);
  const auto levels = interlacings(word);

  DecoratedPolyomino out;
  auto& base = out.base;
  base.m = q.base.n;
  base.n = q.base.m;

  // Red: the initial vertical run, then the odd levels.
  const int zeros = static_cast<int>(std::count(word.begin(), word.end(), Letter{0}));
  base.red.assign(static_cast<std::size_t>(zeros - 1), 1);
  // Which occurrence of each even letter code ends up as which red step.
  std::vector<std::vector<int>> red_step_of(levels.size() + 1);
  for (std::size_t c = 0; c < levels.size(); ++c) {
    const Letter low{static_cast<int>(c)};
    const bool green = c % 2 == 0;
    bool skip_artificial = c == 0;
    for (const auto& l : levels[c]) {
      if (skip_artificial) {
        skip_artificial = false;
        continue;
      }
      const bool is_low = l == low;
      if (green) {
        base.green.push_back(is_low ? 1 : 0);
      } else {
        base.red.push_back(is_low ? 0 : 1);
        if (!is_low) red_step_of[c + 1].push_back(static_cast<int>(base.red.size()));
      }
    }
  }

  for (int pos : q.rise_decorations) {
    const std::size_t i = static_cast<std::size_t>(pos) - 1;
    out.valley_decorations.push_back(red_step_of.at(word[i].code).at(occurrence(word, i)));
  }
  std::sort(out.valley_decorations.begin(), out.valley_decorations.end());
  require_valid(validate(out), "zeta_inverse produced an invalid preimage");
  return out;
}

DecoratedPolyomino pf2_to_polyomino(const TwoCarParkingFunction& f) {
  require_valid(validate(f), "pf2_to_polyomino");
  const auto a = dyck_area_word(f.path);
  AreaWord word{Letter{0}};
  for (std::size_t i = 0; i < a.size(); ++i) word.push_back(Letter::make(a[i], f.labels[i] == 1));
  DecoratedPolyomino out;
  out.base = from_area_word(word);
  for (int row : f.decorated_rises) out.rise_decorations.push_back(row + 1);
  require_valid(validate(out), "pf2_to_polyomino produced an invalid image");
  return out;
}

TwoCarParkingFunction pf2_from_polyomino(const DecoratedPolyomino& q) {
  require_valid(validate(q), "pf2_from_polyomino");
  if (!q.valley_decorations.empty()) throw InvalidObject("pf2_from_polyomino expects rise decorations only");
  const AreaWord word = to_area_word(q.base);
  DyckAreaWord a;
  TwoCarParkingFunction f;
  for (std::size_t i = 1; i < word.size(); ++i) {
    a.push_back(word[i].value());
    f.labels.push_back(word[i].barred() ? 1 : 2);
  }
  f.path = dyck_path_from_area_word(a);
  for (int pos : q.rise_decorations) f.decorated_rises.push_back(pos - 1);
  require_valid(validate(f), "pf2_from_polyomino produced an invalid preimage");
  return f;
}

LabelledPolyomino pldp_to_labelled_polyomino(const PartiallyLabelledDyckPath& p) {
  require_valid(validate(p), "pldp_to_labelled_polyomino");
  const auto valleys = dyck_valleys(p.path);
  const auto rise_rows = dyck_rises(p.path);
  if (p.decorated_rises != rise_rows) throw InvalidObject("every rise must be decorated");
  for (int row : valleys)
    if (p.labels[row - 1] != 0) throw InvalidObject("every valley must be blank");

  const auto a = dyck_area_word(p.path);
  LabelledPolyomino out;
  out.first_label = p.labels.at(0);
  auto& base = out.base;
  base.m = static_cast<int>(valleys.size());
  base.n = static_cast<int>(rise_rows.size());
  std::vector<int> green_height;  // per column
  int y = 0;
  for (std::size_t row = 1; row < a.size(); ++row) {
    const bool valley = p.labels[row] == 0;
    if (valley) {
      base.red.push_back(0);
      green_height.push_back(y - a[row]);
    } else {
      base.red.push_back(1);
      out.step_labels.emplace(static_cast<int>(base.red.size()), p.labels[row]);
      ++y;
    }
  }
  int gy = 0;
  for (int h : green_height) {
    if (h < gy) throw InvalidObject("green path would go down");
    base.green.insert(base.green.end(), static_cast<std::size_t>(h - gy), 1);
    base.green.push_back(0);
    gy = h;
  }
  base.green.insert(base.green.end(), static_cast<std::size_t>(base.n - gy), 1);
  require_valid(validate(out), "pldp_to_labelled_polyomino produced an invalid image");
  return out;
}

PartiallyLabelledDyckPath pldp_from_labelled_polyomino(const LabelledPolyomino& q) {
  require_valid(validate(q), "pldp_from_labelled_polyomino");
  const auto& base = q.base;
  const auto bottoms = green_column_heights(base);
  DyckAreaWord a{0};
  PartiallyLabelledDyckPath p;
  p.labels.push_back(q.first_label);
  int x = 0, y = 0;
  for (std::size_t i = 0; i < base.red.size(); ++i) {
    if (base.red[i]) {
      a.push_back(a.back() + 1);
      p.labels.push_back(q.step_labels.at(static_cast<int>(i) + 1));
      p.decorated_rises.push_back(static_cast<int>(a.size()));
      ++y;
    } else {
      a.push_back(y - bottoms[x]);
      p.labels.push_back(0);
      ++x;
    }
  }
  p.path = dyck_path_from_area_word(a);
  require_valid(validate(p), "pldp_from_labelled_polyomino produced an invalid preimage");
  if (dyck_rises(p.path) != p.decorated_rises) throw InvalidObject("labelled polyomino does not map to a fully decorated path");
  return p;
}

int polyomino_pmaj(const LabelledPolyomino& q) { return pmaj(pldp_from_labelled_polyomino(q)); }

int polyomino_dinv(const LabelledPolyomino& q) { return pldp_dinv(pldp_from_labelled_polyomino(q)); }

}  // namespace polyo
