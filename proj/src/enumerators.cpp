#include "polyo/enumerators.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "polyo/bijections.hpp"
#include "polyo/dyck.hpp"
#include "polyo/polyomino.hpp"
#include "polyo/statistics.hpp"

namespace polyo {

namespace {

// Dense counts indexed by (q exponent, t exponent); grows on demand.
class Histogram {
 public:
  void add(int a, int b) {
    if (a < 0 || b < 0) throw std::logic_error("negative statistic");
    if (static_cast<std::size_t>(a) >= rows_.size()) rows_.resize(static_cast<std::size_t>(a) + 1);
    auto& row = rows_[a];
    if (static_cast<std::size_t>(b) >= row.size()) row.resize(static_cast<std::size_t>(b) + 1, 0);
    ++row[b];
  }

  QTPolynomial polynomial() const {
    QTPolynomial p;
    for (std::size_t a = 0; a < rows_.size(); ++a)
      for (std::size_t b = 0; b < rows_[a].size(); ++b)
        if (rows_[a][b] != 0)
          p.add_term(static_cast<int>(a), static_cast<int>(b), BigInt(static_cast<long>(rows_[a][b])));
    return p;
  }

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

// One histogram per value of s (index 0 unused except for pldp, which has no s).
class SplitHistogram {
 public:
  explicit SplitHistogram(int max_s) : parts_(static_cast<std::size_t>(max_s) + 1) {}
  void add(int s, int a, int b) { parts_.at(static_cast<std::size_t>(s)).add(a, b); }
  std::vector<QTPolynomial> polynomials() const {
    std::vector<QTPolynomial> out;
    for (const auto& h : parts_) out.push_back(h.polynomial());
    return out;
  }

 private:
  std::vector<Histogram> parts_;
};

int sum_values(const std::vector<int>& values, const std::vector<int>& chosen_indices) {
  int total = 0;
  for (int i : chosen_indices) total += values[i];
  return total;
}

std::vector<int> iota_vector(std::size_t size) {
  std::vector<int> v(size);
  for (std::size_t i = 0; i < size; ++i) v[i] = static_cast<int>(i);
  return v;
}

// Area, bounce and per-row bounce values of a polyomino without building the
// area word or the bounce path; buffers are reused across calls.
struct BulletScratch {
  std::vector<int> red_top;    // height of the red east step in column x
  std::vector<int> green_col;  // abscissa of the green north step in row y
  std::vector<int> row_value;  // bounce label value in row y
  int area = 0;
  int bounce = 0;
  int zeros = 0;

  void compute(const ReducedPolyomino& p) {
    red_top.resize(static_cast<std::size_t>(p.m));
    green_col.resize(static_cast<std::size_t>(p.n));
    row_value.resize(static_cast<std::size_t>(p.n));
    area = 0;
    int x = 0, y = 0;
    for (auto step : p.red) {
      if (step) ++y;
      else {
        red_top[x++] = y;
        area += y;
      }
    }
    x = y = 0;
    for (auto step : p.green) {
      if (step) green_col[y++] = x;
      else {
        area -= y;
        ++x;
      }
    }
    x = y = 0;
    bounce = 0;
    zeros = 0;
    int code = 0;
    bool vertical = true;
    while (x < p.m || y < p.n) {
      const int value = code / 2;
      if (vertical) {
        const int start = y;
        while (y < p.n && !(x < p.m && red_top[x] == y)) row_value[y++] = value;
        bounce += value * (y - start);
        if (code == 0) zeros = y;
      } else {
        const int start = x;
        while (x < p.m && !(y < p.n && green_col[y] == x)) ++x;
        bounce += value * (x - start);
      }
      vertical = !vertical;
      ++code;
    }
  }
};

void check_query(const EnumeratorQuery& q) {
  if (q.m < 0 || q.n < 0 || q.k < 0) throw std::invalid_argument("sizes must be non-negative");
  if (!compatible(q.family, q.stats))
    throw std::invalid_argument("statistic pair " + to_string(q.stats) + " does not apply to " + to_string(q.family));
}

// Enumerator split by s; entry s holds the objects with that s.
std::vector<QTPolynomial> brute_by_s(const EnumeratorQuery& q) {
  check_query(q);
  switch (q.family) {
    case Family::rp_bullet: {
      SplitHistogram hist(q.n + 1);
      BulletScratch scratch;
      std::vector<int> valley_value;
      for_each_polyomino(q.m, q.n, [&](const ReducedPolyomino& p) {
        scratch.compute(p);
        if (q.k == 0) {
          hist.add(scratch.zeros + 1, scratch.area, scratch.bounce);
          return;
        }
        valley_value.clear();
        int y = 0;
        for (std::size_t i = 0; i < p.red.size(); ++i) {
          if (!p.red[i]) continue;
          if (i > 0 && !p.red[i - 1]) valley_value.push_back(scratch.row_value[y]);
          ++y;
        }
        for_each_subset(iota_vector(valley_value.size()), q.k, [&](const std::vector<int>& chosen) {
          hist.add(scratch.zeros + 1, scratch.area, scratch.bounce - sum_values(valley_value, chosen));
        });
      });
      return hist.polynomials();
    }
    case Family::rp_star: {
      SplitHistogram hist(q.m + 1);
      for_each_polyomino(q.m, q.n, [&](const ReducedPolyomino& p) {
        const AreaWord w = to_area_word(p);
        const int a = area(w), d = dinv(w), zeros = zero_count_star(w);
        const auto word_rises = rises(w);
        std::vector<int> rise_value;
        for (int r : word_rises) rise_value.push_back(w[r - 1].value());
        for_each_subset(iota_vector(word_rises.size()), q.k, [&](const std::vector<int>& chosen) {
          hist.add(zeros, d, a - sum_values(rise_value, chosen));
        });
      });
      return hist.polynomials();
    }
    case Family::pf2: {
      SplitHistogram hist(q.n + 1);
      for (const auto& f : enumerate_pf2(q.m, q.n, q.k)) {
        const auto st = pf2_stats(f);
        hist.add(diagonal_twos(f) + 1, st.dinv, st.underlined_area);
      }
      return hist.polynomials();
    }
    case Family::pldp: {
      SplitHistogram hist(0);
      for (const auto& p : enumerate_pldp(q.m, q.n, q.k, q.content)) {
        if (q.stats == StatPair::underlined_area_pmaj) hist.add(0, underlined_area(p), pmaj(p));
        else hist.add(0, pldp_dinv(p), underlined_area(p));
      }
      return hist.polynomials();
    }
  }
  throw std::logic_error("unknown family");
}

Json index_json(int m, int n, int s, int k) { return Json{{"m", m}, {"n", n}, {"s", s}, {"k", k}}; }

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::rp_bullet: return "rp-bullet";
    case Family::rp_star: return "rp-star";
    case Family::pf2: return "pf2";
    case Family::pldp: return "pldp";
  }
  return "?";
}

std::string to_string(StatPair s) {
  switch (s) {
    case StatPair::area_bounce_dec: return "area,bounce_dec";
    case StatPair::dinv_area_dec: return "dinv,area_dec";
    case StatPair::dinv_underlined_area: return "dinv,underlined_area";
    case StatPair::underlined_area_pmaj: return "underlined_area,pmaj";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (Family f : {Family::rp_bullet, Family::rp_star, Family::pf2, Family::pldp})
    if (text == to_string(f)) return f;
  if (text == "rp_bullet") return Family::rp_bullet;
  if (text == "rp_star") return Family::rp_star;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

StatPair parse_stat_pair(std::string_view text) {
  // Undecorated spellings are accepted; with k = 0 they coincide.
  if (text == "area,bounce" || text == "area,bounce_dec") return StatPair::area_bounce_dec;
  if (text == "dinv,area" || text == "dinv,area_dec") return StatPair::dinv_area_dec;
  if (text == "dinv,underlined_area") return StatPair::dinv_underlined_area;
  if (text == "underlined_area,pmaj" || text == "area,pmaj") return StatPair::underlined_area_pmaj;
  throw std::invalid_argument("unknown statistic pair '" + std::string(text) + "'");
}

StatPair default_stat_pair(Family f) {
  switch (f) {
    case Family::rp_bullet: return StatPair::area_bounce_dec;
    case Family::rp_star: return StatPair::dinv_area_dec;
    case Family::pf2: return StatPair::dinv_underlined_area;
    case Family::pldp: return StatPair::underlined_area_pmaj;
  }
  return StatPair::area_bounce_dec;
}

bool compatible(Family f, StatPair s) {
  switch (f) {
    case Family::rp_bullet: return s == StatPair::area_bounce_dec;
    case Family::rp_star: return s == StatPair::dinv_area_dec;
    case Family::pf2: return s == StatPair::dinv_underlined_area;
    case Family::pldp: return s == StatPair::underlined_area_pmaj || s == StatPair::dinv_underlined_area;
  }
  return false;
}

QTPolynomial brute_enumerator(const EnumeratorQuery& query) {
  const auto parts = brute_by_s(query);
  if (query.s && query.family != Family::pldp) {
    const int s = *query.s;
    return s >= 0 && static_cast<std::size_t>(s) < parts.size() ? parts[s] : QTPolynomial{};
  }
  QTPolynomial total;
  for (const auto& p : parts) total += p;
  return total;
}

const QTPolynomial& BounceRecursion::operator()(int m, int n, int s, int k) {
  if (m < 0 || n < 0 || k < 0 || s < 1 || s > n + 1)
    throw std::out_of_range("recursion index out of range: m=" + std::to_string(m) + " n=" + std::to_string(n) +
                            " s=" + std::to_string(s) + " k=" + std::to_string(k));
  const auto key = std::make_tuple(m, n, s, k);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  QTPolynomial value;
  if (m == 0) {
    value = (k == 0 && s == n + 1) ? QTPolynomial(1) : QTPolynomial{};
  } else if (s == n + 1) {
    // A full first vertical run leaves the red path without valleys.
    if (k == 0 || options_.printed_initial_condition) value = qbinom(m + n, m);
  } else {
    for (int r = 1; r <= m; ++r) {
      const QTPolynomial outer = qbinom(r + s - 1, r);
      QTPolynomial middle;
      for (int h = 0; h <= std::min(k, r); ++h) {
        QTPolynomial inner;
        for (int v = 1; v <= n - s + 1; ++v) {
          const QTPolynomial& sub = (*this)(m - r, n - s, v, k - h);
          if (!sub.is_zero()) inner += qbinom(r + v - h - 1, r - 1) * sub;
        }
        if (!inner.is_zero()) middle += (qbinom(r, h) * inner).shifted(h * (h - 1) / 2, 0);
      }
      if (middle.is_zero()) continue;
      const int t_exp = m + n + 1 - r - s - k + options_.t_exponent_offset;
      if (t_exp < 0) throw std::logic_error("negative t exponent in the recursion");
      value += (outer * middle).shifted(0, t_exp);
    }
  }
  return memo_.emplace(key, std::move(value)).first->second;
}

QTPolynomial recursion_enumerator(int m, int n, int s, int k) {
  BounceRecursion rec;
  return rec(m, n, s, k);
}

CheckReport check_recursion(int max_m, int max_n, int max_k, BounceRecursion::Options options) {
  CheckReport report;
  report.name = "recursion";
  BounceRecursion rec(options);
  for (int m = 1; m <= max_m; ++m)
    for (int n = 1; n <= max_n; ++n)
      for (int k = 0; k <= max_k; ++k) {
        const auto bullet = brute_by_s({Family::rp_bullet, m, n, k, std::nullopt, {}, StatPair::area_bounce_dec});
        const auto star = brute_by_s({Family::rp_star, n, m, k, std::nullopt, {}, StatPair::dinv_area_dec});
        for (int s = 1; s <= n + 1; ++s) {
          const QTPolynomial& r = rec(m, n, s, k);
          if (r != bullet[s]) {
            Json ex = index_json(m, n, s, k);
            ex["recursion"] = json_of(r);
            ex["brute_bullet"] = json_of(bullet[s]);
            report.fail("recursion != bullet brute force at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                            " s=" + std::to_string(s) + " k=" + std::to_string(k) + ": " + r.to_string() + " vs " +
                            bullet[s].to_string(),
                        ex);
          }
          if (r != star[s]) {
            Json ex = index_json(m, n, s, k);
            ex["recursion"] = json_of(r);
            ex["brute_star"] = json_of(star[s]);
            report.fail("recursion != star brute force at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                            " s=" + std::to_string(s) + " k=" + std::to_string(k) + ": " + r.to_string() + " vs " +
                            star[s].to_string(),
                        ex);
          }
        }
        report.checked.push_back(Json{{"m", m}, {"n", n}, {"k", k}, {"s", Json{{"from", 1}, {"to", n + 1}}}});
      }
  return report;
}

CheckReport check_wilson(int max_m, int max_n, int max_k) {
  CheckReport report;
  report.name = "wilson";
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= max_n; ++n)
      for (int k = 0; k <= max_k; ++k) {
        const auto pf = brute_by_s({Family::pf2, m, n, k, std::nullopt, {}, StatPair::dinv_underlined_area});
        const auto rp = brute_by_s({Family::rp_bullet, m, n, k, std::nullopt, {}, StatPair::area_bounce_dec});
        for (int s = 1; s <= n + 1; ++s) {
          if (pf[s] == rp[s]) continue;
          Json ex = index_json(m, n, s, k);
          ex["pf2"] = json_of(pf[s]);
          ex["rp_bullet"] = json_of(rp[s]);
          report.fail("parking functions != polyominoes at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                          " s=" + std::to_string(s) + " k=" + std::to_string(k),
                      ex);
        }
        report.checked.push_back(Json{{"m", m}, {"n", n}, {"k", k}});
      }
  return report;
}

CheckReport check_zeta_transport(int max_m, int max_n, int max_k) {
  CheckReport report;
  report.name = "zeta-transport";
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= max_n; ++n)
      for (int k = 0; k <= max_k; ++k) {
        std::set<DecoratedPolyomino> images;
        long objects = 0;
        for (const auto& p : enumerate_decorated(m, n, k, DecorationKind::bullet)) {
          ++objects;
          std::string problem;
          try {
            const auto q = zeta(p);
            const AreaWord w = to_area_word(q.base);
            if (q.base.m != n || q.base.n != m) problem = "image has the wrong size";
            else if (area(to_area_word(p.base)) != dinv(w)) problem = "area is not mapped to dinv";
            else if (bounce_dec(p.base, p.valley_decorations) != area_dec(w, q.rise_decorations))
              problem = "underlined bounce is not mapped to underlined area";
            else if (static_cast<int>(q.rise_decorations.size()) != k) problem = "decoration count changed";
            else if (!(zeta_inverse(q) == p)) problem = "inverse does not recover the polyomino";
            else if (!images.insert(q).second) problem = "two polyominoes share an image";
          } catch (const std::exception& e) {
            problem = e.what();
          }
          if (!problem.empty()) report.fail(problem, json_of(p));
        }
        const auto targets = enumerate_decorated(n, m, k, DecorationKind::star).size();
        if (images.size() != targets)
          report.fail("image misses " + std::to_string(targets - images.size()) + " star polyominoes",
                      Json{{"m", m}, {"n", n}, {"k", k}});
        report.checked.push_back(Json{{"m", m}, {"n", n}, {"k", k}, {"objects", objects}});
      }
  return report;
}

}  // namespace polyo
