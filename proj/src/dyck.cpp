#include "polyo/dyck.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <set>

namespace polyo {

namespace {

bool is_sorted_unique(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), [](int a, int b) { return a >= b; }) == v.end();
}

void require_valid(const std::vector<std::string>& errors) {
  if (errors.empty()) return;
  std::string joined;
  for (const auto& e : errors) joined += (joined.empty() ? "" : "; ") + e;
  throw InvalidObject(joined);
}

// Primary pairs: same diagonal, smaller label first. Secondary pairs: the later
// row one diagonal lower, larger label first.
int labelled_dinv(const DyckAreaWord& a, const std::vector<int>& labels) {
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] == a[j] && labels[i] < labels[j]) ++total;
      if (a[i] == a[j] + 1 && labels[i] > labels[j]) ++total;
    }
  return total;
}

int decorated_area(const DyckAreaWord& a, const std::vector<int>& decorated_rows) {
  int sum = std::accumulate(a.begin(), a.end(), 0);
  for (int row : decorated_rows) sum -= a[row - 1];
  return sum;
}

std::vector<std::string> validate_decorated_rises(const Path& path, const std::vector<int>& rows) {
  std::vector<std::string> errors;
  if (!is_sorted_unique(rows)) errors.emplace_back("decorated rises must be sorted and distinct");
  const auto rise_rows = dyck_rises(path);
  for (int row : rows)
    if (!std::binary_search(rise_rows.begin(), rise_rows.end(), row))
      errors.push_back("row " + std::to_string(row) + " is not a rise");
  return errors;
}

}  // namespace

std::vector<std::string> validate_dyck_path(const Path& path) {
  std::vector<std::string> errors;
  int norths = 0, easts = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] > 1) {
      errors.emplace_back("steps must be 0 or 1");
      return errors;
    }
    (path[i] ? norths : easts)++;
    if (easts > norths) {
      errors.push_back("path goes below the diagonal at step " + std::to_string(i + 1));
      return errors;
    }
  }
  if (norths != easts) errors.emplace_back("path does not end on the diagonal");
  return errors;
}

DyckAreaWord dyck_area_word(const Path& path) {
  DyckAreaWord a;
  int x = 0, y = 0;
  for (auto step : path) {
    if (step) {
      a.push_back(y - x);
      ++y;
    } else {
      ++x;
    }
  }
  return a;
}

Path dyck_path_from_area_word(const DyckAreaWord& word) {
  Path path;
  int x = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int target_x = static_cast<int>(i) - word[i];
    if (word[i] < 0 || target_x < x || (i == 0 && word[i] != 0) || (i > 0 && word[i] > word[i - 1] + 1))
      throw InvalidObject("invalid Dyck area word at position " + std::to_string(i + 1));
    for (; x < target_x; ++x) path.push_back(0);
    path.push_back(1);
  }
  for (; x < static_cast<int>(word.size()); ++x) path.push_back(0);
  return path;
}

std::vector<int> north_step_columns(const Path& path) {
  std::vector<int> cols;
  int x = 0;
  for (auto step : path) {
    if (step) cols.push_back(x);
    else ++x;
  }
  return cols;
}

std::vector<int> dyck_valleys(const Path& path) {
  std::vector<int> rows;
  int row = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!path[i]) continue;
    ++row;
    if (i > 0 && !path[i - 1]) rows.push_back(row);
  }
  return rows;
}

std::vector<int> dyck_rises(const Path& path) {
  std::vector<int> rows;
  int row = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!path[i]) continue;
    ++row;
    if (i > 0 && path[i - 1]) rows.push_back(row);
  }
  return rows;
}

int PartiallyLabelledDyckPath::blanks() const {
  return static_cast<int>(std::count(labels.begin(), labels.end(), 0));
}

int TwoCarParkingFunction::ones() const { return static_cast<int>(std::count(labels.begin(), labels.end(), 1)); }
int TwoCarParkingFunction::twos() const { return static_cast<int>(std::count(labels.begin(), labels.end(), 2)); }

std::vector<std::string> validate(const PartiallyLabelledDyckPath& p) {
  auto errors = validate_dyck_path(p.path);
  if (!errors.empty()) return errors;
  const auto cols = north_step_columns(p.path);
  if (cols.size() != p.labels.size()) {
    errors.emplace_back("need exactly one label per north step");
    return errors;
  }
  const auto valleys = dyck_valleys(p.path);
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    const int row = static_cast<int>(i) + 1;
    if (p.labels[i] < 0) errors.push_back("row " + std::to_string(row) + ": negative label");
    if (p.labels[i] == 0 && !std::binary_search(valleys.begin(), valleys.end(), row))
      errors.push_back("row " + std::to_string(row) + ": blank label on a non-valley");
    if (i > 0 && cols[i] == cols[i - 1] && p.labels[i] <= p.labels[i - 1])
      errors.push_back("row " + std::to_string(row) + ": labels must increase up columns");
  }
  auto dec = validate_decorated_rises(p.path, p.decorated_rises);
  errors.insert(errors.end(), dec.begin(), dec.end());
  return errors;
}

std::vector<std::string> validate(const TwoCarParkingFunction& f) {
  auto errors = validate_dyck_path(f.path);
  if (!errors.empty()) return errors;
  const auto cols = north_step_columns(f.path);
  if (cols.size() != f.labels.size()) {
    errors.emplace_back("need exactly one label per north step");
    return errors;
  }
  for (std::size_t i = 0; i < f.labels.size(); ++i) {
    const int row = static_cast<int>(i) + 1;
    if (f.labels[i] != 1 && f.labels[i] != 2) errors.push_back("row " + std::to_string(row) + ": label must be 1 or 2");
    if (i > 0 && cols[i] == cols[i - 1] && f.labels[i] <= f.labels[i - 1])
      errors.push_back("row " + std::to_string(row) + ": labels must increase up columns");
  }
  auto dec = validate_decorated_rises(f.path, f.decorated_rises);
  errors.insert(errors.end(), dec.begin(), dec.end());
  return errors;
}

int underlined_area(const PartiallyLabelledDyckPath& p) {
  return decorated_area(dyck_area_word(p.path), p.decorated_rises);
}

std::vector<int> pmaj_reading_word(const PartiallyLabelledDyckPath& p) {
  require_valid(validate(p));
  const int size = p.size();
  const auto cols = north_step_columns(p.path);
  std::multiset<int> pool;
  std::vector<int> written;
  written.reserve(static_cast<std::size_t>(size));
  std::size_t next_row = 0;
  for (int column = 0; column < size; ++column) {
    while (next_row < cols.size() && cols[next_row] == column) pool.insert(p.labels[next_row++]);
    // Greatest element <= the previous letter, else the greatest overall.
    auto pick = std::prev(pool.end());
    if (!written.empty()) {
      auto it = pool.upper_bound(written.back());
      if (it != pool.begin()) pick = std::prev(it);
    }
    written.push_back(*pick);
    pool.erase(pick);
  }
  return written;
}

int pmaj(const PartiallyLabelledDyckPath& p) {
  auto word = pmaj_reading_word(p);
  std::reverse(word.begin(), word.end());
  int major = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) major += static_cast<int>(i) + 1;
  return major;
}

int pldp_dinv(const PartiallyLabelledDyckPath& p) { return labelled_dinv(dyck_area_word(p.path), p.labels); }

Pf2Stats pf2_stats(const TwoCarParkingFunction& f) {
  const auto a = dyck_area_word(f.path);
  return Pf2Stats{labelled_dinv(a, f.labels), decorated_area(a, f.decorated_rises)};
}

int diagonal_twos(const TwoCarParkingFunction& f) {
  const auto a = dyck_area_word(f.path);
  int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) count += (a[i] == 0 && f.labels[i] == 2) ? 1 : 0;
  return count;
}

std::vector<PartiallyLabelledDyckPath> enumerate_pldp(int m, int n, int k, std::vector<int> content) {
  std::vector<PartiallyLabelledDyckPath> out;
  if (m < 0 || n < 0 || k < 0) return out;
  if (content.empty()) {
    content.resize(static_cast<std::size_t>(n) + 1);
    std::iota(content.begin(), content.end(), 1);
  }
  if (static_cast<int>(content.size()) != n + 1) return out;
  if (std::any_of(content.begin(), content.end(), [](int l) { return l < 1; })) return out;
  std::sort(content.begin(), content.end());
  const int size = m + n + 1;

  for_each_dyck_path(size, [&](const Path& path) {
    const auto valleys = dyck_valleys(path);
    const auto rise_rows = dyck_rises(path);
    const auto cols = north_step_columns(path);
    for_each_subset(valleys, m, [&](const std::vector<int>& blank_rows) {
      std::vector<int> labelled_rows;
      for (int row = 1; row <= size; ++row)
        if (!std::binary_search(blank_rows.begin(), blank_rows.end(), row)) labelled_rows.push_back(row);
      std::vector<int> perm = content;
      do {
        std::vector<int> labels(static_cast<std::size_t>(size), 0);
        for (std::size_t j = 0; j < labelled_rows.size(); ++j) labels[labelled_rows[j] - 1] = perm[j];
        bool ok = true;
        for (int i = 1; i < size && ok; ++i)
          if (cols[i] == cols[i - 1] && labels[i] <= labels[i - 1]) ok = false;
        if (!ok) continue;
        for_each_subset(rise_rows, k, [&](const std::vector<int>& dec) {
          out.push_back(PartiallyLabelledDyckPath{path, labels, dec});
        });
      } while (std::next_permutation(perm.begin(), perm.end()));
    });
  });
  return out;
}

std::vector<TwoCarParkingFunction> enumerate_pf2(int ones, int twos, int k) {
  std::vector<TwoCarParkingFunction> out;
  if (ones < 0 || twos < 0 || k < 0) return out;
  const int size = ones + twos;
  for_each_dyck_path(size, [&](const Path& path) {
    const auto cols = north_step_columns(path);
    // Column runs: [start row index, length].
    std::vector<std::pair<int, int>> runs;
    for (int i = 0; i < size; ++i) {
      if (i > 0 && cols[i] == cols[i - 1]) ++runs.back().second;
      else runs.emplace_back(i, 1);
    }
    if (std::any_of(runs.begin(), runs.end(), [](const auto& r) { return r.second > 2; })) return;
    std::vector<int> singles;
    std::vector<int> labels(static_cast<std::size_t>(size), 0);
    int forced_ones = 0;
    for (const auto& [start, len] : runs) {
      if (len == 2) {
        labels[start] = 1;
        labels[start + 1] = 2;
        ++forced_ones;
      } else {
        singles.push_back(start);
      }
    }
    const int free_ones = ones - forced_ones;
    if (free_ones < 0 || free_ones > static_cast<int>(singles.size())) return;
    const auto rise_rows = dyck_rises(path);
    // Lexicographic over which single columns carry label 1.
    std::vector<int> idx(singles.size());
    std::iota(idx.begin(), idx.end(), 0);
    for_each_subset(idx, free_ones, [&](const std::vector<int>& one_columns) {
      for (std::size_t j = 0; j < singles.size(); ++j) labels[singles[j]] = 2;
      for (int j : one_columns) labels[singles[j]] = 1;
      for_each_subset(rise_rows, k, [&](const std::vector<int>& dec) {
        out.push_back(TwoCarParkingFunction{path, labels, dec});
      });
    });
  });
  return out;
}

}  // namespace polyo
