#include "polyo/oracle_checks.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "polyo/enumerators.hpp"
#include "polyo/symfunc.hpp"

namespace polyo {

namespace {

std::string str(const BigRational& r) { return r.get_str(); }

BigRational hook_side(SymContext& ctx, int m, int n, int k) {
  return ctx.hall(ctx.delta({Generator::h, m}, e(n + 1)), basis_element(Basis::schur, hook(n, k)));
}

BigRational delta_prime_side(SymContext& ctx, int m, int n, int k) {
  return ctx.hall(ctx.delta_prime({Generator::e, m + n - k - 1}, e(m + n)),
                  basis_element(Basis::homogeneous, make_partition({m, n})));
}

int lemma_exponent(int m, int r, int k, LemmaIndexing indexing) {
  return (indexing == LemmaIndexing::corrected ? m + 1 : m) - r - k;
}

BigRational lemma_side(SymContext& ctx, int m, int n, int r, int k, LemmaIndexing indexing) {
  const int d = lemma_exponent(m, r, k, indexing);
  if (d < 0) return 0;
  SymFunc f = ctx.pleth_scale(e(n), r);
  f = ctx.delta({Generator::e, k}, f);
  f = ctx.delta({Generator::h, d}, f);
  return power(ctx.t(), static_cast<unsigned>(d)) * ctx.hall(f, e(n));
}

void require_range(int m, int n, int k) {
  if (m < 0 || n < 0 || k < 0 || k > n) throw std::invalid_argument("need m, n >= 0 and 0 <= k <= n");
}

Json mnk(int m, int n, int k) { return Json{{"m", m}, {"n", n}, {"k", k}}; }

// Label multiset 1^{lambda_1} 2^{lambda_2} ...
std::vector<int> content_of(const Partition& lambda) {
  std::vector<int> labels;
  for (std::size_t i = 0; i < lambda.size(); ++i) labels.insert(labels.end(), static_cast<std::size_t>(lambda[i]), static_cast<int>(i) + 1);
  return labels;
}

// Shared body of the two per-content checks.
CheckReport per_content(const char* name, int m, int n, int k, const std::vector<SamplePoint>& points, StatPair stats,
                        bool with_h) {
  require_range(m, n, k);
  CheckReport report;
  report.name = name;
  const auto& contents = partitions(n + 1);
  std::vector<QTPolynomial> combinatorial;
  for (const auto& lambda : contents)
    combinatorial.push_back(brute_enumerator({Family::pldp, m, n, k, std::nullopt, content_of(lambda), stats}));
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    SymContext ctx(points[pi].first, points[pi].second);
    SymFunc g = ctx.delta_prime({Generator::e, n - k}, e(n + 1));
    if (with_h) g = ctx.delta({Generator::h, m}, g);
    for (std::size_t i = 0; i < contents.size(); ++i) {
      const BigRational oracle = ctx.hall(g, basis_element(Basis::homogeneous, contents[i]));
      const BigRational combo = combinatorial[i].eval(points[pi].first, points[pi].second);
      const bool equal = oracle == combo;
      Json entry = mnk(m, n, k);
      entry["content"] = contents[i];
      entry["point"] = json_of(points[pi]);
      entry["equal"] = equal;
      report.checked.push_back(entry);
      if (!equal) {
        entry["combinatorial"] = str(combo);
        entry["oracle"] = str(oracle);
        entry["polynomial"] = json_of(combinatorial[i]);
        report.fail(std::string(name) + " differs for content " + to_string(contents[i]), entry);
      }
    }
  }
  return report;
}

}  // namespace

Json json_of(const SamplePoint& p) { return Json{{"q", str(p.first)}, {"t", str(p.second)}}; }

std::vector<SamplePoint> sample_points(int count, std::uint64_t seed) {
  const auto primes = small_primes(12);
  const std::size_t pairs = primes.size() * (primes.size() - 1);
  if (count < 0 || static_cast<std::size_t>(count) > pairs) throw std::invalid_argument("unsupported number of sample points");
  std::mt19937_64 rng(seed);
  std::set<std::pair<long, long>> used;
  std::vector<SamplePoint> out;
  while (static_cast<int>(out.size()) < count) {
    const long q = primes[rng() % primes.size()];
    const long t = primes[rng() % primes.size()];
    if (q == t || !used.insert({q, t}).second) continue;
    out.emplace_back(make_rational(q), make_rational(t));
  }
  return out;
}

CheckReport check_identity_1(int m, int n, int k, const std::vector<SamplePoint>& points) {
  require_range(m, n, k);
  if (m + n == 0) throw std::invalid_argument("identity needs m + n >= 1");
  CheckReport report;
  report.name = "identity1";
  for (const auto& pt : points) {
    SymContext ctx(pt.first, pt.second);
    const BigRational lhs = hook_side(ctx, m, n, k);
    const BigRational rhs = delta_prime_side(ctx, m, n, k);
    Json entry = mnk(m, n, k);
    entry["point"] = json_of(pt);
    report.checked.push_back(entry);
    if (lhs != rhs) {
      entry["hook_side"] = str(lhs);
      entry["delta_prime_side"] = str(rhs);
      report.fail("sides differ", entry);
    }
  }
  return report;
}

CheckReport check_identity_2(int m, int n, int k, const std::vector<SamplePoint>& points, LemmaIndexing indexing) {
  require_range(m, n, k);
  CheckReport report;
  report.name = "identity2";
  const int top = (indexing == LemmaIndexing::corrected ? m + 1 : m) - k;
  for (const auto& pt : points) {
    SymContext ctx(pt.first, pt.second);
    BigRational lhs = 0;
    for (int r = 1; r <= top; ++r) lhs += lemma_side(ctx, m, n, r, k, indexing);
    const BigRational rhs = hook_side(ctx, m, n, k);
    Json entry = mnk(m, n, k);
    entry["point"] = json_of(pt);
    report.checked.push_back(entry);
    if (lhs != rhs) {
      entry["scaled_sum"] = str(lhs);
      entry["hook_side"] = str(rhs);
      report.fail("sides differ", entry);
    }
  }
  return report;
}

CheckReport check_lemma(int m, int n, int r, int k, const std::vector<SamplePoint>& points, LemmaIndexing indexing) {
  if (m < 0 || n < 0 || k < 0 || r < 1) throw std::invalid_argument("need m, n, k >= 0 and r >= 1");
  CheckReport report;
  report.name = "lemma";
  const QTPolynomial brute = brute_enumerator({Family::rp_star, m, n, k, r, {}, StatPair::dinv_area_dec});
  for (const auto& pt : points) {
    SymContext ctx(pt.first, pt.second);
    const BigRational lhs = brute.eval(pt.first, pt.second);
    const BigRational rhs = lemma_side(ctx, m, n, r, k, indexing);
    Json entry = mnk(m, n, k);
    entry["r"] = r;
    entry["point"] = json_of(pt);
    report.checked.push_back(entry);
    if (lhs != rhs) {
      entry["enumerator"] = json_of(brute);
      entry["enumerator_value"] = str(lhs);
      entry["scaled_side"] = str(rhs);
      report.fail("enumerator differs from the scaled scalar product", entry);
    }
  }
  return report;
}

CheckReport check_final(int m, int n, int k, const std::vector<SamplePoint>& points) {
  require_range(m, n, k);
  CheckReport report;
  report.name = "final";
  const QTPolynomial brute = brute_enumerator({Family::rp_star, m, n, k, std::nullopt, {}, StatPair::dinv_area_dec});
  for (const auto& pt : points) {
    SymContext ctx(pt.first, pt.second);
    const BigRational combo = brute.eval(pt.first, pt.second);
    const BigRational hook_value = hook_side(ctx, m, n, k);
    Json entry = mnk(m, n, k);
    entry["point"] = json_of(pt);
    bool equal = combo == hook_value;
    if (m + n > 0) {
      const BigRational dp = delta_prime_side(ctx, m, n, k);
      equal = equal && dp == combo;
      if (!equal) entry["delta_prime_side"] = str(dp);
    } else {
      entry["delta_prime_side"] = "skipped at degree 0";
    }
    report.checked.push_back(entry);
    if (!equal) {
      entry["enumerator"] = json_of(brute);
      entry["enumerator_value"] = str(combo);
      entry["hook_side"] = str(hook_value);
      report.fail("three-way equality fails", entry);
    }
  }
  return report;
}

CheckReport check_final_interpolated(int m, int n, int k) {
  require_range(m, n, k);
  if (m + n == 0) throw std::invalid_argument("interpolated check needs m + n >= 1");
  CheckReport report;
  report.name = "final-interpolated";
  const QTPolynomial brute = brute_enumerator({Family::rp_star, m, n, k, std::nullopt, {}, StatPair::dinv_area_dec});
  const int dq = (m + n + 1) * (m + n) / 2;
  const int dt = m * n;
  Json entry = mnk(m, n, k);
  entry["bounds"] = Json{{"q", dq}, {"t", dt}};
  const auto try_side = [&](const char* label, auto&& evaluate) {
    try {
      const QTPolynomial p = interpolate(
          [&](const BigRational& q, const BigRational& t) {
            SymContext ctx(q, t);
            return evaluate(ctx);
          },
          dq, dt);
      if (p != brute) {
        Json ex = entry;
        ex["side"] = label;
        ex["interpolated"] = json_of(p);
        ex["enumerator"] = json_of(brute);
        report.fail(std::string(label) + " polynomial differs: " + p.to_string() + " vs " + brute.to_string(), ex);
      }
    } catch (const InterpolationError& err) {
      Json ex = entry;
      ex["side"] = label;
      report.fail(std::string(label) + ": " + err.what(), ex);
    }
  };
  try_side("hook_side", [&](SymContext& ctx) { return hook_side(ctx, m, n, k); });
  try_side("delta_prime_side", [&](SymContext& ctx) { return delta_prime_side(ctx, m, n, k); });
  entry["polynomial"] = brute.to_string();
  report.checked.push_back(entry);
  return report;
}

CheckReport check_pmaj_conjecture(int m, int n, int k, const std::vector<SamplePoint>& points) {
  return per_content("pmaj-conjecture", m, n, k, points, StatPair::underlined_area_pmaj, true);
}

CheckReport check_pldp_dinv(int n, int k, const std::vector<SamplePoint>& points) {
  return per_content("pldp-dinv", 0, n, k, points, StatPair::dinv_underlined_area, false);
}

}  // namespace polyo
