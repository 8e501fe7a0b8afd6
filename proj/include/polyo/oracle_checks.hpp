#pragma once

// Pointwise and interpolated comparisons between the combinatorial
// enumerators and scalar products computed by the symmetric-function engine.

#include <cstdint>
#include <utility>
#include <vector>

#include "polyo/json_io.hpp"
#include "polyo/qt_algebra.hpp"

namespace polyo {

using SamplePoint = std::pair<BigRational, BigRational>;

/// `count` points (q,t) with q != t, both drawn from small primes; the same
/// seed always gives the same points.
std::vector<SamplePoint> sample_points(int count, std::uint64_t seed);

/// How the scaled-alphabet formula indexes the star family with r zeros in
/// the area word. `corrected` uses the exponent m+1-r-k; `printed` uses m-r-k.
enum class LemmaIndexing { corrected, printed };

/// <Delta_{h_m} e_{n+1}, s_{k+1,1^{n-k}}> = <Delta'_{e_{m+n-k-1}} e_{m+n}, h_m h_n>, requires m+n >= 1.
CheckReport check_identity_1(int m, int n, int k, const std::vector<SamplePoint>& points);

/// sum_r t^d <Delta_{h_d} Delta_{e_k} e_n[X(1-q^r)/(1-q)], e_n> = <Delta_{h_m} e_{n+1}, s_{k+1,1^{n-k}}>.
CheckReport check_identity_2(int m, int n, int k, const std::vector<SamplePoint>& points,
                             LemmaIndexing indexing = LemmaIndexing::corrected);

/// Star polyominoes of width m and height n with r zeros in the area word
/// against t^d <Delta_{h_d} Delta_{e_k} e_n[X(1-q^r)/(1-q)], e_n>.
CheckReport check_lemma(int m, int n, int r, int k, const std::vector<SamplePoint>& points,
                        LemmaIndexing indexing = LemmaIndexing::corrected);

/// Star enumerator of m x n polyominoes against both scalar products. At
/// m = n = 0 the Delta' side has degree 0 and is skipped.
CheckReport check_final(int m, int n, int k, const std::vector<SamplePoint>& points);

/// Both scalar products interpolated as polynomials and compared exactly with
/// the brute-force enumerator. Degree bounds: C(m+n+1,2) in q, m*n in t.
CheckReport check_final_interpolated(int m, int n, int k);

/// For every content lambda of n+1: PLDPs with that content, (underlined area,
/// pmaj), against <Delta_{h_m} Delta'_{e_{n-k}} e_{n+1}, h_lambda>.
CheckReport check_pmaj_conjecture(int m, int n, int k, const std::vector<SamplePoint>& points);

/// The blank-free case of the dinv statistic: labelled Dyck paths of size n+1
/// with (dinv, underlined area) against <Delta'_{e_{n-k}} e_{n+1}, h_lambda>.
CheckReport check_pldp_dinv(int n, int k, const std::vector<SamplePoint>& points);

Json json_of(const SamplePoint& p);

}  // namespace polyo
