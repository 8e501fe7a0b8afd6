#pragma once

// Brute-force q,t-enumerators over every family, the memoized bounce
// recursion, and the checks comparing them.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "polyo/json_io.hpp"
#include "polyo/qt_algebra.hpp"

namespace polyo {

enum class Family { rp_bullet, rp_star, pf2, pldp };

/// First statistic goes to q, second to t.
enum class StatPair { area_bounce_dec, dinv_area_dec, dinv_underlined_area, underlined_area_pmaj };

std::string to_string(Family f);
std::string to_string(StatPair s);
Family parse_family(std::string_view text);
StatPair parse_stat_pair(std::string_view text);
StatPair default_stat_pair(Family f);
bool compatible(Family f, StatPair s);

/// Size conventions per family:
///   rp_bullet  m x n polyominoes, k decorated valleys, s - 1 zero labels on the bounce path
///   rp_star    m x n polyominoes, k decorated rises, s unbarred zeros in the area word
///   pf2        m ones, n twos, k decorated rises, s - 1 twos on the diagonal
///   pldp       m blanks, n + 1 labels (content, default 1..n+1), k decorated rises
struct EnumeratorQuery {
  Family family = Family::rp_bullet;
  int m = 0;
  int n = 0;
  int k = 0;
  std::optional<int> s;
  std::vector<int> content;
  StatPair stats = StatPair::area_bounce_dec;
};

/// Throws std::invalid_argument for negative sizes or an incompatible pair.
QTPolynomial brute_enumerator(const EnumeratorQuery& query);

/// The bounce recursion with its initial conditions, memoized on (m,n,s,k).
class BounceRecursion {
 public:
  struct Options {
    // Use the k-independent initial value at s = n+1 even for k > 0.
    bool printed_initial_condition = false;
    // Added to the t exponent of every recursive term; nonzero only as a
    // negative control.
    int t_exponent_offset = 0;
  };

  BounceRecursion() = default;
  explicit BounceRecursion(Options options) : options_(options) {}

  /// Requires m, n, k >= 0 and 1 <= s <= n+1; throws std::out_of_range otherwise.
  const QTPolynomial& operator()(int m, int n, int s, int k);

 private:
  Options options_;
  std::map<std::tuple<int, int, int, int>, QTPolynomial> memo_;
};

QTPolynomial recursion_enumerator(int m, int n, int s, int k);

/// Recursion against the brute bullet enumerator and the brute star
/// enumerator (dimensions swapped), for 1 <= m <= max_m, 1 <= n <= max_n,
/// 0 <= k <= max_k and every s.
CheckReport check_recursion(int max_m, int max_n, int max_k, BounceRecursion::Options options = {});

/// Two-car parking functions with m ones and n twos against the bullet
/// polyominoes, 0 <= m <= max_m, 0 <= n <= max_n, 0 <= k <= max_k, every s.
CheckReport check_wilson(int max_m, int max_n, int max_k);

/// Bullet (area, bounce_dec) against star (dinv, area_dec) with swapped
/// dimensions, for every s.
CheckReport check_zeta_transport(int max_m, int max_n, int max_k);

}  // namespace polyo
