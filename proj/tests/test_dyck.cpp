#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "polyo/dyck.hpp"
#include "polyo/qt_algebra.hpp"

using namespace polyo;

namespace {

PartiallyLabelledDyckPath pldp(const char* path, std::vector<int> labels, std::vector<int> dec = {}) {
  return {path_from_string(path), std::move(labels), std::move(dec)};
}

const DyckAreaWord kLabelledWord{0, 1, 2, 1, 2, 3, 4, 4, 1, 2, 0, 1};
const std::vector<int> kLabelledLabels{1, 2, 4, 0, 5, 7, 8, 0, 0, 3, 0, 6};

std::vector<Path> brute_dyck_paths(int size) {
  std::vector<Path> out;
  for (int mask = 0; mask < (1 << (2 * size)); ++mask) {
    Path p;
    int h = 0;
    bool ok = true;
    for (int i = 0; i < 2 * size && ok; ++i) {
      const bool north = (mask >> i) & 1;
      p.push_back(north ? 1 : 0);
      h += north ? 1 : -1;
      ok = h >= 0;
    }
    if (ok && h == 0) out.push_back(p);
  }
  return out;
}

// Start points (x, y) of the north steps.
std::vector<std::pair<int, int>> north_starts(const Path& path) {
  std::vector<std::pair<int, int>> out;
  int x = 0, y = 0;
  for (auto s : path) {
    if (s) out.emplace_back(x, y++);
    else ++x;
  }
  return out;
}

// Column-by-column multiset reading, then the major index of the reversal.
int oracle_pmaj(const Path& path, const std::vector<int>& labels) {
  const auto starts = north_starts(path);
  const int size = static_cast<int>(labels.size());
  std::multiset<int> pool;
  std::vector<int> written;
  for (int column = 0; column < size; ++column) {
    for (std::size_t i = 0; i < starts.size(); ++i)
      if (starts[i].first == column) pool.insert(labels[i]);
    REQUIRE_FALSE(pool.empty());
    auto it = pool.end();
    if (!written.empty()) {
      auto above = pool.upper_bound(written.back());
      if (above != pool.begin()) it = std::prev(above);
    }
    if (it == pool.end()) it = std::prev(pool.end());
    written.push_back(*it);
    pool.erase(it);
  }
  std::reverse(written.begin(), written.end());
  int maj = 0;
  for (std::size_t i = 0; i + 1 < written.size(); ++i)
    if (written[i] > written[i + 1]) maj += static_cast<int>(i) + 1;
  return maj;
}

int oracle_dinv(const Path& path, const std::vector<int>& labels) {
  std::vector<int> a;
  for (auto [x, y] : north_starts(path)) a.push_back(y - x);
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] == a[j] && labels[i] < labels[j]) ++d;
      if (a[i] == a[j] + 1 && labels[i] > labels[j]) ++d;
    }
  return d;
}

// Rows preceded by a north step (rises) and by an east step (valleys).
std::pair<std::vector<int>, std::vector<int>> rises_valleys(const Path& path) {
  std::vector<int> rises, valleys;
  int row = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!path[i]) continue;
    ++row;
    if (i == 0) continue;
    (path[i - 1] ? rises : valleys).push_back(row);
  }
  return {rises, valleys};
}

bool labels_ok(const Path& path, const std::vector<int>& labels) {
  const auto [rises, valleys] = rises_valleys(path);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int row = static_cast<int>(i) + 1;
    if (labels[i] == 0 && !std::binary_search(valleys.begin(), valleys.end(), row)) return false;
    if (std::binary_search(rises.begin(), rises.end(), row) && labels[i] <= labels[i - 1]) return false;
  }
  return true;
}

long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

TEST_CASE("dyck area words") {
  CHECK(dyck_area_word(path_from_string("NNEE")) == DyckAreaWord{0, 1});
  CHECK(dyck_area_word(path_from_string("NENE")) == DyckAreaWord{0, 0});
  const Path labelled_path = dyck_path_from_area_word(kLabelledWord);
  CHECK(dyck_area_word(labelled_path) == kLabelledWord);
  CHECK(validate_dyck_path(labelled_path).empty());
  CHECK_FALSE(validate_dyck_path(path_from_string("ENNE")).empty());
  CHECK_FALSE(validate_dyck_path(path_from_string("NNE")).empty());
  for (int size = 1; size <= 6; ++size)
    for (const auto& p : brute_dyck_paths(size)) CHECK(dyck_path_from_area_word(dyck_area_word(p)) == p);
}

TEST_CASE("rises and valleys of dyck paths") {
  const Path p = path_from_string("NNENEENE");
  CHECK(dyck_rises(p) == std::vector<int>{2});
  CHECK(dyck_valleys(p) == std::vector<int>{3, 4});
  CHECK(north_step_columns(p) == std::vector<int>{0, 0, 1, 3});
}

TEST_CASE("underlined area") {
  const Path labelled_path = dyck_path_from_area_word(kLabelledWord);
  const PartiallyLabelledDyckPath p{labelled_path, kLabelledLabels, dyck_rises(labelled_path)};
  CHECK(validate(p).empty());
  CHECK(dyck_rises(labelled_path).size() == 7);
  CHECK(p.blanks() == 4);
  CHECK(underlined_area(p) == 6);
  CHECK(underlined_area(PartiallyLabelledDyckPath{labelled_path, kLabelledLabels, {}}) == 21);
  CHECK(underlined_area(pldp("NNEE", {1, 2})) == 1);
}

TEST_CASE("pmaj examples") {
  CHECK(pmaj(pldp("NNEE", {1, 2})) == 0);
  CHECK(pmaj(pldp("NENE", {1, 2})) == 1);
  CHECK(pmaj(pldp("NENE", {2, 1})) == 0);
  CHECK(pmaj_reading_word(pldp("NNEE", {1, 2})) == std::vector<int>{2, 1});
  CHECK(pmaj_reading_word(pldp("NENE", {1, 2})) == std::vector<int>{1, 2});
  // Size-2 distribution of (area, pmaj).
  std::multiset<std::pair<int, int>> dist;
  for (const auto& p : enumerate_pldp(0, 1, 0)) dist.insert({underlined_area(p), pmaj(p)});
  CHECK(dist == std::multiset<std::pair<int, int>>{{1, 0}, {0, 0}, {0, 1}});
}

TEST_CASE("dinv examples") {
  CHECK(pldp_dinv(pldp("NNEE", {1, 2})) == 0);
  CHECK(pldp_dinv(pldp("NENE", {1, 2})) == 1);
  CHECK(pldp_dinv(pldp("NNNNEEEE", {1, 2, 3, 4})) == 0);
  CHECK(pldp_dinv(pldp("NENENENE", {1, 2, 3, 4})) == 6);
}

TEST_CASE("validation of labelled paths") {
  CHECK(validate(pldp("NENE", {1, 0})).empty());
  CHECK_FALSE(validate(pldp("NNEE", {1, 0})).empty());  // blank on a rise
  CHECK_FALSE(validate(pldp("NNEE", {2, 1})).empty());  // column not increasing
  CHECK_FALSE(validate(pldp("NENE", {1, 2}, {2})).empty());  // decoration on a valley
  CHECK_FALSE(validate(pldp("NENE", {1})).empty());
}

TEST_CASE("two-car parking functions") {
  const TwoCarParkingFunction pf_example{dyck_path_from_area_word({0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0}),
                                   {1, 1, 2, 2, 1, 1, 1, 2, 1, 2, 1}, {}};
  CHECK(validate(pf_example).empty());
  CHECK(pf2_stats(pf_example).underlined_area == 6);
  CHECK(pf_example.ones() == 7);
  CHECK(pf_example.twos() == 4);
  const TwoCarParkingFunction twos{path_from_string("NENE"), {2, 2}, {}};
  CHECK(validate(twos).empty());
  CHECK(pf2_stats(twos) == Pf2Stats{0, 0});
  const TwoCarParkingFunction rise{path_from_string("NNEE"), {1, 2}, {}};
  CHECK(pf2_stats(rise) == Pf2Stats{0, 1});
  CHECK_FALSE(validate(TwoCarParkingFunction{path_from_string("NNEE"), {2, 1}, {}}).empty());
  CHECK_FALSE(validate(TwoCarParkingFunction{path_from_string("NENE"), {3, 1}, {}}).empty());

  const auto listed = enumerate_pf2(1, 1, 0);
  CHECK(listed.size() == 3);
  QTPolynomial f;
  for (const auto& pf : listed) f.add_term(pf2_stats(pf).dinv, pf2_stats(pf).underlined_area, 1);
  CHECK(f == 1 + QTPolynomial::q() + QTPolynomial::t());
}

TEST_CASE("diagonal twos") {
  CHECK(diagonal_twos(TwoCarParkingFunction{path_from_string("NENE"), {2, 2}, {}}) == 2);
  CHECK(diagonal_twos(TwoCarParkingFunction{path_from_string("NNEE"), {1, 2}, {}}) == 0);
}

TEST_CASE("pldp enumeration and statistics against brute force") {
  CHECK(enumerate_pldp(0, 0, 0).size() == 1);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; m + n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        const int size = m + n + 1;
        std::vector<int> multiset(static_cast<std::size_t>(m), 0);
        for (int l = 1; l <= n + 1; ++l) multiset.push_back(l);
        long expected = 0;
        for (const auto& path : brute_dyck_paths(size)) {
          const int rises = static_cast<int>(rises_valleys(path).first.size());
          std::vector<int> labels = multiset;
          do {
            if (labels_ok(path, labels)) expected += binom(rises, k);
          } while (std::next_permutation(labels.begin(), labels.end()));
        }
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(k);
        const auto listed = enumerate_pldp(m, n, k);
        CHECK(static_cast<long>(listed.size()) == expected);
        for (const auto& p : listed) {
          CHECK(validate(p).empty());
          CHECK(p.blanks() == m);
          CHECK(static_cast<int>(p.decorated_rises.size()) == k);
          CHECK(pmaj(p) == oracle_pmaj(p.path, p.labels));
          CHECK(pldp_dinv(p) == oracle_dinv(p.path, p.labels));
          auto sorted_word = pmaj_reading_word(p);
          auto sorted_labels = p.labels;
          std::sort(sorted_word.begin(), sorted_word.end());
          std::sort(sorted_labels.begin(), sorted_labels.end());
          CHECK(sorted_word == sorted_labels);
          int ua = 0;
          const auto a = dyck_area_word(p.path);
          for (std::size_t i = 0; i < a.size(); ++i)
            if (!std::binary_search(p.decorated_rises.begin(), p.decorated_rises.end(), static_cast<int>(i) + 1)) ua += a[i];
          CHECK(underlined_area(p) == ua);
        }
      }
}

TEST_CASE("pf2 enumeration against brute force") {
  for (int ones = 0; ones <= 4; ++ones)
    for (int twos = 0; ones + twos <= 6; ++twos) {
      if (ones + twos == 0) continue;
      long expected = 0;
      for (const auto& path : brute_dyck_paths(ones + twos)) {
        std::vector<int> labels(static_cast<std::size_t>(ones), 1);
        labels.insert(labels.end(), static_cast<std::size_t>(twos), 2);
        do {
          if (labels_ok(path, labels)) ++expected;
        } while (std::next_permutation(labels.begin(), labels.end()));
      }
      CAPTURE(ones);
      CAPTURE(twos);
      const auto listed = enumerate_pf2(ones, twos, 0);
      CHECK(static_cast<long>(listed.size()) == expected);
      for (const auto& f : listed) {
        CHECK(validate(f).empty());
        CHECK(pf2_stats(f).dinv == oracle_dinv(f.path, f.labels));
      }
    }
}
