#include "polyo/statistics.hpp"

#include <algorithm>

namespace polyo {

int area(const AreaWord& word) {
  int sum = 0;
  for (const auto& l : word) sum += l.value();
  return sum;
}

int area_dec(const AreaWord& word, const std::vector<int>& rise_decorations) {
  const auto word_rises = rises(word);
  int sum = area(word);
  for (int pos : rise_decorations) {
    if (!std::binary_search(word_rises.begin(), word_rises.end(), pos))
      throw InvalidObject("position " + std::to_string(pos) + " is not a rise");
    sum -= word[pos - 1].value();
  }
  return sum;
}

int dinv(const AreaWord& word) {
  // Scan right to left, counting how many letters of each rank lie to the right.
  int max_code = 0;
  for (const auto& l : word) max_code = std::max(max_code, l.code);
  std::vector<int> seen(static_cast<std::size_t>(max_code) + 1, 0);
  int total = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->code > 0) total += seen[it->code - 1];
    ++seen[it->code];
  }
  return total;
}

int cell_area(const ReducedPolyomino& p) {
  const auto top = red_column_heights(p);
  const auto bottom = green_column_heights(p);
  int sum = 0;
  for (std::size_t x = 0; x < top.size(); ++x) sum += top[x] - bottom[x];
  return sum;
}

std::vector<int> BouncePath::run_lengths() const {
  std::vector<int> runs(1, 0);
  for (const auto& s : steps) {
    if (static_cast<int>(runs.size()) <= s.label.code) runs.resize(static_cast<std::size_t>(s.label.code) + 1, 0);
    ++runs[s.label.code];
  }
  return runs;
}

std::vector<std::pair<int, int>> BouncePath::corners() const {
  std::vector<std::pair<int, int>> out{{0, 0}};
  int x = 0, y = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].north) ++y;
    else ++x;
    if (i + 1 == steps.size() || steps[i + 1].north != steps[i].north) out.emplace_back(x, y);
  }
  return out;
}

BouncePath bounce_path(const ReducedPolyomino& p) {
  const int w = p.m + 1, h = p.n + 1;
  // red_east_start[x*h + y]: the red path takes an east step from (x,y).
  std::vector<std::uint8_t> red_east_start(static_cast<std::size_t>(w * h), 0);
  std::vector<std::uint8_t> green_north_start(static_cast<std::size_t>(w * h), 0);
  {
    int x = 0, y = 0;
    for (auto step : p.red) {
      if (step) ++y;
      else red_east_start[x++ * h + y] = 1;
    }
    x = y = 0;
    for (auto step : p.green) {
      if (step) green_north_start[x * h + y++] = 1;
      else ++x;
    }
  }
  BouncePath path;
  path.steps.reserve(static_cast<std::size_t>(p.m + p.n));
  int x = 0, y = 0, code = 0;
  bool vertical = true;
  int idle_runs = 0;
  while (x < p.m || y < p.n) {
    const std::size_t before = path.steps.size();
    if (vertical) {
      while (y < p.n && !red_east_start[x * h + y]) {
        path.steps.push_back({true, Letter{code}});
        ++y;
      }
    } else {
      while (x < p.m && !green_north_start[x * h + y]) {
        path.steps.push_back({false, Letter{code}});
        ++x;
      }
    }
    idle_runs = path.steps.size() == before ? idle_runs + 1 : 0;
    if (idle_runs > 1) throw InvalidObject("bounce path is stuck; paths do not form a reduced polyomino");
    vertical = !vertical;
    ++code;
  }
  return path;
}

std::vector<Letter> bounce_row_labels(const ReducedPolyomino& p) {
  std::vector<Letter> rows;
  rows.reserve(static_cast<std::size_t>(p.n));
  for (const auto& s : bounce_path(p).steps)
    if (s.north) rows.push_back(s.label);
  return rows;
}

int bounce(const ReducedPolyomino& p) {
  int sum = 0;
  for (const auto& s : bounce_path(p).steps) sum += s.label.value();
  return sum;
}

int bounce_dec(const ReducedPolyomino& p, const std::vector<int>& valley_decorations) {
  const auto valleys = red_valleys(p);
  const auto rows = bounce_row_labels(p);
  int sum = bounce(p);
  for (int step : valley_decorations) {
    if (!std::binary_search(valleys.begin(), valleys.end(), step))
      throw InvalidObject("red step " + std::to_string(step) + " is not a valley");
    sum -= rows[red_step_row(p, step)].value();
  }
  return sum;
}

int zero_count_bullet(const ReducedPolyomino& p) {
  int zeros = 0;
  for (const auto& s : bounce_path(p).steps) zeros += s.label.code == 0 ? 1 : 0;
  return zeros;
}

int zero_count_star(const AreaWord& word) {
  return static_cast<int>(std::count(word.begin(), word.end(), Letter{0}));
}

}  // namespace polyo
