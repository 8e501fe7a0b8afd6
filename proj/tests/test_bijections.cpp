#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "polyo/bijections.hpp"
#include "polyo/statistics.hpp"

using namespace polyo;

namespace {

ReducedPolyomino poly(const char* red, const char* green) { return ReducedPolyomino::from_strings(red, green); }

std::string word(const ReducedPolyomino& p) { return to_string(to_area_word(p)); }

}  // namespace

TEST_CASE("zeta on the worked example") {
  const DecoratedPolyomino p{poly("NNNEEENEENEEENEEEEN", "EENNNEEEEENEEENEENN"), {}, {10, 14}};
  const auto image = zeta(p);
  CHECK(image.base.m == 7);
  CHECK(image.base.n == 12);
  CHECK(word(image.base) == "0 0̄ 0̄ 0 0 0 0̄ 1 1̄ 2 1̄ 1̄ 0̄ 0̄ 1 1̄ 1̄ 2 0̄ 0̄");
  CHECK(image.rise_decorations == std::vector<int>{10, 15});
  CHECK(image.valley_decorations.empty());
  CHECK(cell_area(p.base) == 19);
  CHECK(bounce_dec(p.base, p.valley_decorations) == 8);
  const AreaWord w = to_area_word(image.base);
  CHECK(dinv(w) == 19);
  CHECK(area_dec(w, image.rise_decorations) == 8);
  CHECK(zeta_inverse(image) == p);
}

TEST_CASE("zeta on 1 x 1") {
  CHECK(word(zeta({poly("NE", "NE"), {}, {}}).base) == "0 0 0̄");
  CHECK(word(zeta({poly("EN", "EN"), {}, {}}).base) == "0 0̄ 1");
  CHECK(word(zeta({poly("NE", "EN"), {}, {}}).base) == "0 0̄ 0");
}

TEST_CASE("zeta input validation") {
  CHECK_THROWS_AS(zeta({poly("NE", "EN"), {3}, {}}), InvalidObject);
  CHECK_THROWS_AS(zeta_inverse({poly("NE", "EN"), {}, {2}}), InvalidObject);
}

TEST_CASE("interlacings reassemble the word") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for_each_polyomino(m, n, [&](const ReducedPolyomino& p) {
        const AreaWord w = to_area_word(p);
        const auto levels = interlacings(w);
        CHECK(assemble_from_interlacings(levels) == w);
        for (std::size_t c = 0; c < levels.size(); ++c)
          for (const auto& l : levels[c]) CHECK((l.code == static_cast<int>(c) || l.code == static_cast<int>(c) + 1));
      });
}

TEST_CASE("zeta is a statistic-preserving bijection on small sizes") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= 2; ++k) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(k);
        std::set<DecoratedPolyomino> images;
        const auto source = enumerate_decorated(m, n, k, DecorationKind::bullet);
        for (const auto& p : source) {
          const auto q = zeta(p);
          CHECK(validate(q).empty());
          CHECK(q.base.m == n);
          CHECK(q.base.n == m);
          CHECK(static_cast<int>(q.rise_decorations.size()) == k);
          const AreaWord w = to_area_word(q.base);
          CHECK(dinv(w) == cell_area(p.base));
          CHECK(area_dec(w, q.rise_decorations) == bounce_dec(p.base, p.valley_decorations));
          CHECK(zeta_inverse(q) == p);
          images.insert(q);
        }
        CHECK(images.size() == source.size());
        CHECK(images.size() == enumerate_decorated(n, m, k, DecorationKind::star).size());
      }
}

TEST_CASE("parking function map examples") {
  const TwoCarParkingFunction pf_example{dyck_path_from_area_word({0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0}),
                                   {1, 1, 2, 2, 1, 1, 1, 2, 1, 2, 1}, {}};
  const auto image = pf2_to_polyomino(pf_example);
  CHECK(word(image.base) == "0 0̄ 0̄ 1 1 1̄ 1̄ 1̄ 1 0̄ 0 0̄");
  CHECK(image.base.m == 4);
  CHECK(image.base.n == 7);
  CHECK(word(pf2_to_polyomino({path_from_string("NNEE"), {1, 2}, {}}).base) == "0 0̄ 1");
  CHECK(word(pf2_to_polyomino({path_from_string("NENE"), {2, 1}, {}}).base) == "0 0 0̄");
  CHECK(pf2_from_polyomino(image) == pf_example);
}

TEST_CASE("parking function map preserves statistics") {
  for (int ones = 0; ones <= 4; ++ones)
    for (int twos = 0; ones + twos <= 6; ++twos)
      for (int k = 0; k <= 2; ++k) {
        CAPTURE(ones);
        CAPTURE(twos);
        CAPTURE(k);
        std::set<DecoratedPolyomino> images;
        const auto listed = enumerate_pf2(ones, twos, k);
        for (const auto& f : listed) {
          const auto q = pf2_to_polyomino(f);
          CHECK(validate(q).empty());
          const AreaWord w = to_area_word(q.base);
          const auto st = pf2_stats(f);
          CHECK(dinv(w) == st.dinv);
          CHECK(area_dec(w, q.rise_decorations) == st.underlined_area);
          CHECK(pf2_from_polyomino(q) == f);
          images.insert(q);
        }
        CHECK(images.size() == listed.size());
        if (ones + twos > 0) CHECK(images.size() == enumerate_decorated(twos, ones, k, DecorationKind::star).size());
      }
}

TEST_CASE("labelled path map on a size-12 example") {
  const Path path = dyck_path_from_area_word({0, 1, 2, 1, 2, 3, 4, 4, 1, 2, 0, 1});
  const PartiallyLabelledDyckPath p{path, {1, 2, 4, 0, 5, 7, 8, 0, 0, 3, 0, 6}, dyck_rises(path)};
  const auto q = pldp_to_labelled_polyomino(p);
  CHECK(path_to_string(q.base.red) == "NNENNNEENEN");
  CHECK(path_to_string(q.base.green) == "NEENNNENNEN");
  CHECK(cell_area(q.base) == 6);
  CHECK(underlined_area(p) == 6);
  CHECK(polyomino_pmaj(q) == pmaj(p));
  CHECK(polyomino_dinv(q) == pldp_dinv(p));
  CHECK(pldp_from_labelled_polyomino(q) == p);
}

TEST_CASE("labelled path map degenerate size") {
  const PartiallyLabelledDyckPath p{path_from_string("NE"), {5}, {}};
  const auto q = pldp_to_labelled_polyomino(p);
  CHECK(q.base.m == 0);
  CHECK(q.base.n == 0);
  CHECK(q.first_label == 5);
  CHECK(polyomino_pmaj(q) == 0);
  CHECK(pldp_from_labelled_polyomino(q) == p);
}

TEST_CASE("labelled path map requires full rise decoration") {
  const PartiallyLabelledDyckPath p{path_from_string("NNEE"), {1, 2}, {}};
  CHECK_THROWS_AS(pldp_to_labelled_polyomino(p), InvalidObject);
}

TEST_CASE("labelled path map is a bijection transporting statistics") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; m + n <= 5; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      std::set<LabelledPolyomino> images;
      const auto listed = enumerate_pldp(m, n, n);
      for (const auto& p : listed) {
        const auto q = pldp_to_labelled_polyomino(p);
        CHECK(validate(q).empty());
        CHECK(q.base.m == m);
        CHECK(q.base.n == n);
        CHECK(cell_area(q.base) == underlined_area(p));
        CHECK(polyomino_pmaj(q) == pmaj(p));
        CHECK(pldp_from_labelled_polyomino(q) == p);
        images.insert(q);
      }
      CHECK(images.size() == listed.size());
      std::vector<int> content;
      for (int i = 1; i <= n + 1; ++i) content.push_back(i);
      CHECK(images.size() == enumerate_labelled(m, n, content).size());
    }
}

TEST_CASE("ordered labels turn pmaj into bounce") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for_each_polyomino(m, n, [&](const ReducedPolyomino& p) {
        LabelledPolyomino l{p, 1, {}};
        int next = 2;
        for (int i = 0; i < m + n; ++i)
          if (p.red[static_cast<std::size_t>(i)]) l.step_labels[i + 1] = next++;
        REQUIRE(validate(l).empty());
        CHECK(polyomino_pmaj(l) == bounce(p));
      });
}
