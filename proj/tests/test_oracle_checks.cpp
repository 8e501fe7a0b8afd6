#include <set>

#include "doctest.h"
#include "polyo/enumerators.hpp"
#include "polyo/oracle_checks.hpp"
#include "polyo/symfunc.hpp"

using namespace polyo;

namespace {

const auto kPoints = sample_points(3, 7);

}  // namespace

TEST_CASE("sample points are deterministic and non-degenerate") {
  CHECK(sample_points(3, 7) == kPoints);
  CHECK(sample_points(5, 1) != sample_points(5, 2));
  const auto many = sample_points(40, 11);
  std::set<SamplePoint> distinct(many.begin(), many.end());
  CHECK(distinct.size() == many.size());
  for (const auto& [q, t] : many) {
    CHECK(q != t);
    CHECK(q > 1);
    CHECK(t > 1);
  }
  CHECK(json_of(SamplePoint{2, 3}).dump() == R"({"q":"2","t":"3"})");
  CHECK_THROWS_AS(sample_points(1000, 1), std::invalid_argument);
}

TEST_CASE("first identity on small sizes") {
  CHECK(check_identity_1(0, 1, 0, kPoints).equal());
  CHECK(check_identity_1(1, 1, 0, kPoints).equal());
  CHECK(check_identity_1(1, 1, 1, kPoints).equal());
  CHECK(check_identity_1(2, 2, 2, kPoints).equal());
  CHECK(check_identity_1(1, 0, 0, kPoints).equal());
  CHECK(check_identity_1(1, 1, 0, kPoints).checked.size() == 3);
  CHECK_THROWS_AS(check_identity_1(0, 0, 0, kPoints), std::invalid_argument);
  CHECK_THROWS_AS(check_identity_1(1, 1, 2, kPoints), std::invalid_argument);
}

TEST_CASE("second identity") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= n; ++k) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(check_identity_2(m, n, k, kPoints).equal());
      }
  CHECK_FALSE(check_identity_2(1, 1, 0, kPoints, LemmaIndexing::printed).equal());
}

TEST_CASE("lemma on small sizes") {
  EnumeratorQuery q{Family::rp_star, 1, 1, 0, 1, {}, StatPair::dinv_area_dec};
  CHECK(brute_enumerator(q) == QTPolynomial::t());
  CHECK(check_lemma(1, 1, 1, 0, kPoints).equal());
  q.s = 2;
  CHECK(brute_enumerator(q) == 1 + QTPolynomial::q());
  CHECK(check_lemma(1, 1, 2, 0, kPoints).equal());
  // k > m + 1 - r: both sides vanish.
  q.s = 2;
  q.k = 1;
  CHECK(brute_enumerator(q).is_zero());
  CHECK(check_lemma(1, 1, 2, 1, kPoints).equal());
  CHECK(check_lemma(2, 3, 1, 1, kPoints).equal());
}

TEST_CASE("lemma negative control with the unshifted exponent") {
  const auto report = check_lemma(1, 1, 1, 0, kPoints, LemmaIndexing::printed);
  CHECK_FALSE(report.equal());
  CHECK(report.counterexample.contains("enumerator"));
  CHECK(report.counterexample.at("r") == 1);
}

TEST_CASE("final equality") {
  CHECK(check_final(0, 0, 0, kPoints).equal());
  CHECK(check_final(1, 1, 0, kPoints).equal());
  CHECK(check_final(2, 1, 0, kPoints).equal());
  CHECK(check_final(2, 1, 1, kPoints).equal());
  CHECK(check_final(1, 2, 2, kPoints).equal());
  CHECK(check_final(0, 0, 0, kPoints).checked.at(0).at("delta_prime_side") == "skipped at degree 0");
}

TEST_CASE("final equality by interpolation") {
  const auto report = check_final_interpolated(1, 1, 0);
  CHECK(report.equal());
  CHECK(report.checked.at(0).at("polynomial") == "1 + q + t");
  CHECK(check_final_interpolated(2, 1, 1).equal());
  CHECK_THROWS_AS(check_final_interpolated(0, 0, 0), std::invalid_argument);
}

TEST_CASE("pmaj conjecture at small sizes") {
  CHECK(check_pmaj_conjecture(0, 1, 0, kPoints).equal());
  CHECK(check_pmaj_conjecture(1, 1, 0, kPoints).equal());
  CHECK(check_pmaj_conjecture(1, 1, 1, kPoints).equal());
  // One entry per content and point.
  CHECK(check_pmaj_conjecture(0, 2, 1, kPoints).checked.size() == 3 * partitions(3).size());
}

TEST_CASE("labelled path dinv against the oracle") {
  CHECK(check_pldp_dinv(1, 0, kPoints).equal());
  CHECK(check_pldp_dinv(2, 1, kPoints).equal());
}

TEST_CASE("report shape") {
  CheckReport r;
  r.name = "demo";
  CHECK(r.equal());
  r.fail("first", Json{{"a", 1}});
  r.fail("second", Json{{"a", 2}});
  CHECK_FALSE(r.equal());
  const Json j = r.to_json();
  CHECK(j.at("check") == "demo");
  CHECK(j.at("equal") == false);
  CHECK(j.at("counterexample").at("a") == 1);
  CHECK(j.at("failures").size() == 2);
}
