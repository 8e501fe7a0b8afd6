// Acceptance run: one PASS/FAIL line per criterion, with wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "polyo/bijections.hpp"
#include "polyo/enumerators.hpp"
#include "polyo/oracle_checks.hpp"
#include "polyo/selftest.hpp"
#include "polyo/statistics.hpp"
#include "polyo/symfunc.hpp"

using namespace polyo;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (condition || !passed) {
      passed = passed && condition;
      return;
    }
    passed = false;
    detail = what;
  }
  void absorb(const CheckReport& r, const std::string& where) {
    if (!r.equal()) require(false, where + ": " + r.failures.front() + " " + r.counterexample.dump());
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds)
    outcome.require(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s", seconds);
  std::cout << (outcome.passed ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << timing << ")";
  if (!outcome.detail.empty()) std::cout << " -- " << outcome.detail;
  std::cout << std::endl;
  failures += outcome.passed ? 0 : 1;
}

Outcome worked_examples() {
  Outcome o;
  for (const auto& c : run_selftest()) o.require(c.passed, c.name + ": " + c.detail);
  return o;
}

Outcome recursion() {
  Outcome o;
  o.absorb(check_recursion(5, 5, 3), "recursion");
  return o;
}

Outcome bijection_suites() {
  Outcome o;
  o.absorb(check_zeta_transport(5, 5, 2), "zeta");

  long pf_objects = 0;
  for (int ones = 0; ones <= 9; ++ones)
    for (int twos = 0; ones + twos <= 9; ++twos)
      for (int k = 0; k <= 2; ++k) {
        std::set<DecoratedPolyomino> images;
        const auto listed = enumerate_pf2(ones, twos, k);
        for (const auto& f : listed) {
          ++pf_objects;
          const auto q = pf2_to_polyomino(f);
          const AreaWord w = to_area_word(q.base);
          const auto st = pf2_stats(f);
          o.require(dinv(w) == st.dinv && area_dec(w, q.rise_decorations) == st.underlined_area,
                    "pf2 statistics not preserved at ones=" + std::to_string(ones) + " twos=" + std::to_string(twos));
          o.require(pf2_from_polyomino(q) == f, "pf2 round trip fails");
          images.insert(q);
        }
        o.require(images.size() == listed.size(), "pf2 map not injective");
        if (ones + twos > 0)
          o.require(images.size() == enumerate_decorated(twos, ones, k, DecorationKind::star).size(),
                    "pf2 map not onto the star polyominoes");
      }

  long pldp_objects = 0;
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; m + n <= 6; ++n) {
      std::set<LabelledPolyomino> images;
      const auto listed = enumerate_pldp(m, n, n);
      for (const auto& p : listed) {
        ++pldp_objects;
        const auto q = pldp_to_labelled_polyomino(p);
        o.require(cell_area(q.base) == underlined_area(p), "underlined area not mapped to area");
        o.require(polyomino_pmaj(q) == pmaj(p), "pmaj not transported");
        o.require(pldp_from_labelled_polyomino(q) == p, "labelled path round trip fails");
        images.insert(q);
      }
      std::vector<int> content;
      for (int i = 1; i <= n + 1; ++i) content.push_back(i);
      o.require(images.size() == listed.size() && images.size() == enumerate_labelled(m, n, content).size(),
                "labelled path map not bijective at m=" + std::to_string(m) + " n=" + std::to_string(n));
      // Ordered labels: pmaj collapses to bounce.
      for_each_polyomino(m, n, [&](const ReducedPolyomino& base) {
        LabelledPolyomino l{base, 1, {}};
        int next = 2;
        for (int i = 0; i < m + n; ++i)
          if (base.red[static_cast<std::size_t>(i)]) l.step_labels[i + 1] = next++;
        o.require(polyomino_pmaj(l) == bounce(base), "ordered-label pmaj differs from bounce");
      });
    }
  if (o.passed) o.detail = std::to_string(pf_objects) + " parking functions, " + std::to_string(pldp_objects) + " labelled paths";
  return o;
}

Outcome wilson() {
  Outcome o;
  o.absorb(check_wilson(4, 4, 2), "wilson");
  return o;
}

Outcome symfunc_pins() {
  Outcome o;
  for (const auto& [q, t] : sample_points(3, 7)) {
    SymContext ctx(q, t);
    const auto s = [](const Partition& l) { return basis_element(Basis::schur, l); };
    const SymFunc h2 = ctx.macdonald_H({2}), h11 = ctx.macdonald_H({1, 1});
    o.require(ctx.hall(h2, s({2})) == 1 && ctx.hall(h2, s({1, 1})) == q, "H~_2 differs from s_2 + q s_11");
    o.require(ctx.hall(h11, s({2})) == 1 && ctx.hall(h11, s({1, 1})) == t, "H~_11 differs from s_2 + t s_11");
    o.require(ctx.hall(ctx.delta({Generator::e, 2}, e(2)), s({1, 1})) == q + t, "<Delta_e2 e2, s_11> differs from q + t");
    for (int d = 1; d <= 5; ++d)
      for (const auto& a : partitions(d))
        for (const auto& b : partitions(d))
          o.require(ctx.hall(s(a), s(b)) == (a == b ? 1 : 0), "Schur functions not orthonormal");
  }
  return o;
}

Outcome identities() {
  Outcome o;
  const auto points = sample_points(3, 7);
  long checks = 0;
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; m + n <= 6; ++n)
      for (int k = 0; k <= n; ++k) {
        const std::string at = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
        if (m + n >= 1) {
          o.absorb(check_identity_1(m, n, k, points), "identity1 " + at);
          ++checks;
        }
        o.absorb(check_identity_2(m, n, k, points), "identity2 " + at);
        for (int r = 1; r <= m + 1; ++r) o.absorb(check_lemma(m, n, r, k, points), "lemma r=" + std::to_string(r) + " " + at);
        o.absorb(check_final(m, n, k, points), "final " + at);
        checks += 2 + m + 1;
        if (m + n >= 1 && m + n <= 5) {
          o.absorb(check_final_interpolated(m, n, k), "final-interpolated " + at);
          ++checks;
        }
      }
  if (o.passed) o.detail = std::to_string(checks) + " checks";
  return o;
}

Outcome conjecture() {
  Outcome o;
  const auto points = sample_points(3, 7);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        const auto r = check_pmaj_conjecture(m, n, k, points);
        std::cout << "  pmaj conjecture m=" << m << " n=" << n << " k=" << k << ": "
                  << (r.equal() ? "equal" : "NOT EQUAL") << " over " << r.checked.size() << " (content, point) pairs"
                  << std::endl;
        o.absorb(r, "pmaj-conjecture m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
  return o;
}

Outcome narayana() {
  Outcome o;
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      const auto f = brute_enumerator({Family::rp_bullet, m, n, 0, std::nullopt, {}, StatPair::area_bounce_dec});
      o.require(f == f.swapped_qt(), "not symmetric at m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  return o;
}

Outcome performance() {
  Outcome o;
  const auto f = brute_enumerator({Family::rp_bullet, 7, 7, 0, std::nullopt, {}, StatPair::area_bounce_dec});
  BigRational total = f.eval(1, 1);
  o.require(total == 2760615, "RP(7,7) has " + total.get_str() + " objects, expected 2760615");
  o.detail = total.get_str() + " polyominoes";
  return o;
}

}  // namespace

int main() {
  criterion(1, "worked-example regression suite", 1, worked_examples);
  criterion(2, "bounce recursion equals both brute-force enumerators (m,n <= 5, k <= 3)", 120, recursion);
  criterion(3, "bijection suites: zeta, parking functions, labelled paths", 180, bijection_suites);
  criterion(4, "parking functions equal bullet polyominoes (m,n <= 4, k <= 2)", 0, wilson);
  criterion(5, "symmetric-function oracle pins", 0, symfunc_pins);
  criterion(6, "identities, lemma and final equality at points; interpolation for m+n <= 5", 600, identities);
  criterion(7, "pmaj conjecture report (m+n <= 4, every content)", 0, conjecture);
  criterion(8, "area/bounce q,t-Narayana symmetry (m,n <= 5)", 0, narayana);
  criterion(9, "RP(7,7) area/bounce enumerator", 10, performance);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
