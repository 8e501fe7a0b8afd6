#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "polyo/qt_algebra.hpp"
#include "polyo/statistics.hpp"

using namespace polyo;

namespace {

ReducedPolyomino poly(const char* red, const char* green) { return ReducedPolyomino::from_strings(red, green); }

const char* kBounceRed = "NNNEEENEENEEENEEEEN";
const char* kBounceGreen = "EENNNEEEEENEEENEENN";

// Lattice points visited by a path, indexed by step.
std::vector<std::pair<int, int>> points_of(const Path& path) {
  std::vector<std::pair<int, int>> pts{{0, 0}};
  for (auto s : path) pts.emplace_back(pts.back().first + (s ? 0 : 1), pts.back().second + (s ? 1 : 0));
  return pts;
}

// Row scan: in row y the cells lie between the red and the green north step.
int row_scan_area(const ReducedPolyomino& p) {
  std::vector<int> red_x(static_cast<std::size_t>(p.n)), green_x(static_cast<std::size_t>(p.n));
  const auto rp = points_of(p.red), gp = points_of(p.green);
  for (std::size_t i = 0; i < p.red.size(); ++i) {
    if (p.red[i]) red_x[static_cast<std::size_t>(rp[i].second)] = rp[i].first;
    if (p.green[i]) green_x[static_cast<std::size_t>(gp[i].second)] = gp[i].first;
  }
  int sum = 0;
  for (int y = 0; y < p.n; ++y) sum += green_x[static_cast<std::size_t>(y)] - red_x[static_cast<std::size_t>(y)];
  return sum;
}

int pair_dinv(const AreaWord& w) {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) d += w[i].code == w[j].code + 1 ? 1 : 0;
  return d;
}

struct OracleStep {
  bool north;
  int code;
  int row;  // y of the step's start
};

// Direct transcription of the stopping rule: vertical mode stops at the start
// of a horizontal red step, horizontal mode at the start of a vertical green step.
std::vector<OracleStep> oracle_bounce(const ReducedPolyomino& p) {
  std::set<std::pair<int, int>> red_e_starts, green_n_starts;
  const auto rp = points_of(p.red), gp = points_of(p.green);
  for (std::size_t i = 0; i < p.red.size(); ++i) {
    if (!p.red[i]) red_e_starts.insert(rp[i]);
    if (p.green[i]) green_n_starts.insert(gp[i]);
  }
  std::vector<OracleStep> steps;
  int x = 0, y = 0, code = 0;
  bool vertical = true;
  int guard = 0;
  while ((x != p.m || y != p.n) && guard++ < 1000) {
    if (vertical) {
      while (y < p.n && !red_e_starts.count({x, y})) steps.push_back({true, code, y++});
    } else {
      while (x < p.m && !green_n_starts.count({x, y})) {
        steps.push_back({false, code, y});
        ++x;
      }
    }
    vertical = !vertical;
    ++code;
  }
  REQUIRE(guard < 1000);
  return steps;
}

int oracle_bounce_value(const ReducedPolyomino& p, const std::vector<int>& valleys) {
  std::set<int> rows;
  const auto rp = points_of(p.red);
  for (int v : valleys) rows.insert(rp[static_cast<std::size_t>(v - 1)].second);
  int sum = 0;
  for (const auto& s : oracle_bounce(p))
    if (!(s.north && rows.count(s.row))) sum += s.code / 2;
  return sum;
}

long binom(int a, int b) {
  long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

TEST_CASE("area examples") {
  const auto tall = poly("NNNEEENEENEEENNEEEE", "EEENEENNEENEEENEENN");
  CHECK(area(to_area_word(tall)) == 30);
  CHECK(cell_area(tall) == 30);
  CHECK(row_scan_area(tall) == 30);
  CHECK(area(parse_area_word("0 0 0̄")) == 0);
  CHECK(area(parse_area_word("0 0̄ 1")) == 1);
}

TEST_CASE("decorated area") {
  const AreaWord zeta_word = parse_area_word("0 0̄ 0̄ 0 0 0 0̄ 1 1̄ 2 1̄ 1̄ 0̄ 0̄ 1 1̄ 1̄ 2 0̄ 0̄");
  CHECK(area(zeta_word) == 11);
  CHECK(area_dec(zeta_word, {10, 15}) == 8);
  CHECK(area_dec(zeta_word, {}) == 11);
  CHECK(area_dec(parse_area_word("0 0̄ 1"), {3}) == 0);
  CHECK_THROWS_AS(area_dec(parse_area_word("0 0̄ 1"), {2}), InvalidObject);
}

TEST_CASE("dinv examples") {
  CHECK(dinv(parse_area_word("0 0̄ 0")) == 1);
  CHECK(dinv(parse_area_word("0 0 0̄")) == 0);
  CHECK(dinv(parse_area_word("0 0̄ 1")) == 0);
}

TEST_CASE("bounce path of a 12 x 7 polyomino with two decorated valleys") {
  const auto p = poly(kBounceRed, kBounceGreen);
  const auto path = bounce_path(p);
  CHECK(path.corners() == std::vector<std::pair<int, int>>{{0, 0}, {0, 3}, {7, 3}, {7, 5}, {12, 5}, {12, 7}});
  std::vector<int> codes;
  for (const auto& s : path.steps) codes.push_back(s.label.code);
  std::vector<int> expected;
  for (auto [code, count] : std::vector<std::pair<int, int>>{{0, 3}, {1, 7}, {2, 2}, {3, 5}, {4, 2}})
    expected.insert(expected.end(), static_cast<std::size_t>(count), code);
  CHECK(codes == expected);
  CHECK(bounce(p) == 11);
  CHECK(bounce_dec(p, {10, 14}) == 8);
  CHECK(cell_area(p) == 19);
  CHECK(zero_count_bullet(p) + 1 == 4);
  CHECK_THROWS_AS(bounce_dec(p, {2}), InvalidObject);
}

TEST_CASE("bounce on the 1 x 1 polyominoes") {
  const auto en = bounce_path(poly("EN", "EN"));
  REQUIRE(en.steps.size() == 2);
  CHECK_FALSE(en.steps[0].north);
  CHECK(en.steps[0].label == Letter::make(0, true));
  CHECK(en.steps[1].north);
  CHECK(en.steps[1].label == Letter::make(1, false));
  CHECK(bounce(poly("EN", "EN")) == 1);

  const auto ne = bounce_path(poly("NE", "NE"));
  REQUIRE(ne.steps.size() == 2);
  CHECK(ne.steps[0].north);
  CHECK(ne.steps[0].label == Letter::make(0, false));
  CHECK(ne.steps[1].label == Letter::make(0, true));
  CHECK(bounce(poly("NE", "NE")) == 0);
}

TEST_CASE("zero counts") {
  CHECK(zero_count_star(parse_area_word("0 0 0̄")) == 2);
  CHECK(zero_count_star(parse_area_word("0 0̄ 1")) == 1);
}

TEST_CASE("statistics agree with independent oracles on every small polyomino") {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n)
      for_each_polyomino(m, n, [&](const ReducedPolyomino& p) {
        const AreaWord w = to_area_word(p);
        CHECK(area(w) == row_scan_area(p));
        CHECK(cell_area(p) == row_scan_area(p));
        const int d = dinv(w);
        CHECK(d == pair_dinv(w));
        CHECK(d <= static_cast<int>(binom(static_cast<int>(w.size()), 2)));

        const auto steps = oracle_bounce(p);
        const auto path = bounce_path(p);
        REQUIRE(path.steps.size() == steps.size());
        int zeros = 0;
        for (std::size_t i = 0; i < steps.size(); ++i) {
          CHECK(path.steps[i].north == steps[i].north);
          CHECK(path.steps[i].label.code == steps[i].code);
          zeros += steps[i].code == 0 ? 1 : 0;
        }
        CHECK(bounce(p) == oracle_bounce_value(p, {}));
        CHECK(zero_count_bullet(p) == zeros);
        const auto valleys = red_valleys(p);
        for_each_subset(valleys, std::min<int>(2, static_cast<int>(valleys.size())), [&](const std::vector<int>& chosen) {
          CHECK(bounce_dec(p, chosen) == oracle_bounce_value(p, chosen));
        });
      });
}

TEST_CASE("area and bounce are jointly symmetric") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      QTPolynomial f;
      for_each_polyomino(m, n, [&](const ReducedPolyomino& p) { f.add_term(cell_area(p), bounce(p), 1); });
      CAPTURE(m);
      CAPTURE(n);
      CHECK(f == f.swapped_qt());
    }
}
