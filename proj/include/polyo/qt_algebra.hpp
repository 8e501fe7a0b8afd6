#pragma once

// Exact arithmetic: big rationals (GMP), sparse q,t-polynomials with integer
// coefficients, Gaussian binomials, point evaluation and grid interpolation.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyo {

using BigInt = mpz_class;
// mpq_class keeps itself canonical (reduced, positive denominator) as long as
// every construction goes through make_rational or arithmetic operators.
using BigRational = mpq_class;

BigRational make_rational(long numerator, long denominator = 1);
BigRational make_rational(const BigInt& numerator, const BigInt& denominator);
BigRational power(const BigRational& base, unsigned exponent);
bool is_integer(const BigRational& value);

/// Sparse polynomial in q and t with arbitrary-precision integer coefficients.
/// No zero coefficient is ever stored.
class QTPolynomial {
 public:
  struct Exponents {
    int q = 0;
    int t = 0;
    auto operator<=>(const Exponents&) const = default;
  };
  using TermMap = std::map<Exponents, BigInt>;

  QTPolynomial() = default;
  QTPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit QTPolynomial(const BigInt& constant);

  static QTPolynomial monomial(int deg_q, int deg_t, const BigInt& coeff = 1);
  static QTPolynomial q() { return monomial(1, 0); }
  static QTPolynomial t() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  BigInt coeff(int deg_q, int deg_t) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // -1 for the zero polynomial.
  int degree_q() const;
  int degree_t() const;

  void add_term(int deg_q, int deg_t, const BigInt& coeff);

  QTPolynomial& operator+=(const QTPolynomial& other);
  QTPolynomial& operator-=(const QTPolynomial& other);
  QTPolynomial& operator*=(const QTPolynomial& other);

  friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { return a += b; }
  friend QTPolynomial operator-(QTPolynomial a, const QTPolynomial& b) { return a -= b; }
  friend QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b);
  friend bool operator==(const QTPolynomial& a, const QTPolynomial& b) { return a.terms_ == b.terms_; }

  QTPolynomial scaled(const BigInt& factor) const;
  QTPolynomial shifted(int deg_q, int deg_t) const;
  QTPolynomial swapped_qt() const;
  bool has_nonnegative_coefficients() const;

  BigRational eval(const BigRational& q0, const BigRational& t0) const;

  // Terms in canonical order: total degree ascending, then q-degree
  // descending; "1 + q + t + qt", "1 + q + 2q^2 + q^3 + q^4".
  std::vector<std::pair<Exponents, BigInt>> canonical_terms() const;
  std::string to_string() const;

 private:
  TermMap terms_;
};

BigRational eval(const QTPolynomial& p, const BigRational& q0, const BigRational& t0);

/// Gaussian binomial [a choose b]_q; zero when b > a.
QTPolynomial qbinom(int a, int b);

using PointEvaluator = std::function<BigRational(const BigRational&, const BigRational&)>;

class InterpolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Node sets are disjoint small primes so no grid point has q == t, q == 1 or
// t == 1.
std::vector<BigRational> q_interpolation_nodes(int count);
std::vector<BigRational> t_interpolation_nodes(int count);

/// Recovers the integer polynomial of q-degree <= deg_q_bound and t-degree <=
/// deg_t_bound whose values the evaluator reports. Throws InterpolationError if
/// a coefficient does not come out integral.
QTPolynomial interpolate(const PointEvaluator& evaluator, int deg_q_bound, int deg_t_bound);

/// Univariate exact interpolation through (nodes[i], values[i]); returns the
/// monomial coefficients, lowest degree first.
std::vector<BigRational> interpolate_univariate(const std::vector<BigRational>& nodes,
                                                const std::vector<BigRational>& values);

std::vector<long> small_primes(int count);

}  // namespace polyo
