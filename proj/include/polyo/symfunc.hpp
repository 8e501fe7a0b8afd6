#pragma once

// Symmetric functions of bounded degree at a fixed rational (q,t): the
// classical bases, the Hall scalar product, the scaling plethysm
// X -> X(1-q^r)/(1-q), modified Macdonald polynomials and the Delta operators.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyo/qt_algebra.hpp"

namespace polyo {

using Partition = std::vector<int>;  // weakly decreasing, positive parts

/// Partitions of d in reverse lexicographic order, (d) first and (1^d) last.
const std::vector<Partition>& partitions(int d);
int partition_index(const Partition& lambda);
/// Sorts parts decreasingly and drops zeros.
Partition make_partition(std::vector<int> parts);
Partition conjugate(const Partition& lambda);
int partition_size(const Partition& lambda);
/// z_lambda = prod_i i^{m_i} m_i!
BigInt z_lambda(const Partition& lambda);
std::string to_string(const Partition& lambda);
/// (k+1, 1^(n-k))
Partition hook(int n, int k);

/// Default 8; POLYO_SYMFUNC_MAX_DEGREE overrides.
int symfunc_max_degree();

class DegreeBoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The H~ basis is singular at the chosen (q,t).
class SingularPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Basis { monomial, elementary, homogeneous, powersum, schur, macdonald };
std::string to_string(Basis b);

struct SymFunc {
  int degree = 0;
  Basis basis = Basis::monomial;
  std::vector<BigRational> coeffs;  // indexed like partitions(degree)

  BigRational coeff(const Partition& lambda) const { return coeffs.at(static_cast<std::size_t>(partition_index(lambda))); }
  bool is_zero() const;

  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator*=(const BigRational& factor);
};

SymFunc basis_element(Basis b, const Partition& lambda);
SymFunc zero(int degree, Basis b = Basis::monomial);
inline SymFunc e(int n) { return basis_element(Basis::elementary, n == 0 ? Partition{} : Partition{n}); }
inline SymFunc h(int n) { return basis_element(Basis::homogeneous, n == 0 ? Partition{} : Partition{n}); }

/// Rows are basis elements, columns monomials: B_lambda = sum_mu M[lambda][mu] m_mu.
/// Integer counts (0-1 and N matrices, Kostka numbers, part assignments).
const std::vector<std::vector<BigInt>>& monomial_expansion(Basis b, int d);

/// Coefficient of m_lambda in H~_mu: sum of q^inv t^maj over fillings of mu
/// with content lambda.
const std::vector<std::vector<QTPolynomial>>& macdonald_monomial_table(int d);

/// B_mu = sum over cells of q^coarm t^coleg.
QTPolynomial macdonald_B(const Partition& mu);

struct Generator {
  enum Kind { e, h } kind = e;
  int k = 0;
};

/// Everything that depends on the sample point. Cheap to construct; degree
/// data is built lazily and kept for the lifetime of the context.
class SymContext {
 public:
  SymContext(BigRational q, BigRational t);

  const BigRational& q() const { return q_; }
  const BigRational& t() const { return t_; }

  SymFunc convert(const SymFunc& f, Basis target);
  BigRational hall(const SymFunc& f, const SymFunc& g);
  SymFunc pleth_scale(const SymFunc& f, int r);
  /// H~_mu in the monomial basis at (q,t).
  SymFunc macdonald_H(const Partition& mu);
  SymFunc delta(Generator f, const SymFunc& g);
  SymFunc delta_prime(Generator f, const SymFunc& g);

  /// f[B_mu] or f[B_mu - 1] evaluated at the point.
  BigRational eigenvalue(Generator f, const Partition& mu, bool prime) const;

 private:
  struct DegreeData;
  DegreeData& data(int d);
  const std::vector<std::vector<BigRational>>& to_monomial(Basis b, int d);
  const std::vector<std::vector<BigRational>>& from_monomial(Basis b, int d);
  SymFunc apply_eigenvalues(Generator f, const SymFunc& g, bool prime);

  BigRational q_, t_;
  std::map<int, std::shared_ptr<DegreeData>> degrees_;
};

}  // namespace polyo
