#include "polyo/qt_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace polyo {

BigRational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  BigRational r(numerator, denominator);
  r.canonicalize();
  return r;
}

BigRational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  BigRational r(numerator, denominator);
  r.canonicalize();
  return r;
}

BigRational power(const BigRational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return make_rational(num, den);
}

bool is_integer(const BigRational& value) { return value.get_den() == 1; }

QTPolynomial::QTPolynomial(long constant) {
  if (constant != 0) terms_.emplace(Exponents{0, 0}, BigInt(constant));
}

QTPolynomial::QTPolynomial(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Exponents{0, 0}, constant);
}

QTPolynomial QTPolynomial::monomial(int deg_q, int deg_t, const BigInt& coeff) {
  QTPolynomial p;
  p.add_term(deg_q, deg_t, coeff);
  return p;
}

BigInt QTPolynomial::coeff(int deg_q, int deg_t) const {
  auto it = terms_.find({deg_q, deg_t});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int QTPolynomial::degree_q() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.q);
  return d;
}

int QTPolynomial::degree_t() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.t);
  return d;
}

void QTPolynomial::add_term(int deg_q, int deg_t, const BigInt& coeff) {
  if (deg_q < 0 || deg_t < 0) throw std::invalid_argument("negative exponent in QTPolynomial");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponents{deg_q, deg_t}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.q, e.t, c);
  return *this;
}

QTPolynomial& QTPolynomial::operator-=(const QTPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.q, e.t, -c);
  return *this;
}

QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b) {
  QTPolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.q + eb.q, ea.t + eb.t, ca * cb);
  return r;
}

QTPolynomial& QTPolynomial::operator*=(const QTPolynomial& other) {
  *this = *this * other;
  return *this;
}

QTPolynomial QTPolynomial::scaled(const BigInt& factor) const {
  QTPolynomial r;
  if (factor == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * factor);
  return r;
}

QTPolynomial QTPolynomial::shifted(int deg_q, int deg_t) const {
  QTPolynomial r;
  for (const auto& [e, c] : terms_) r.add_term(e.q + deg_q, e.t + deg_t, c);
  return r;
}

QTPolynomial QTPolynomial::swapped_qt() const {
  QTPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponents{e.t, e.q}, c);
  return r;
}

bool QTPolynomial::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

BigRational QTPolynomial::eval(const BigRational& q0, const BigRational& t0) const {
  if (terms_.empty()) return BigRational(0);
  std::vector<BigRational> qpow{BigRational(1)}, tpow{BigRational(1)};
  const int dq = degree_q(), dt = degree_t();
  for (int i = 1; i <= dq; ++i) qpow.push_back(qpow.back() * q0);
  for (int i = 1; i <= dt; ++i) tpow.push_back(tpow.back() * t0);
  BigRational sum(0);
  for (const auto& [e, c] : terms_) sum += BigRational(c) * qpow[e.q] * tpow[e.t];
  sum.canonicalize();
  return sum;
}

BigRational eval(const QTPolynomial& p, const BigRational& q0, const BigRational& t0) {
  return p.eval(q0, t0);
}

std::vector<std::pair<QTPolynomial::Exponents, BigInt>> QTPolynomial::canonical_terms() const {
  std::vector<std::pair<Exponents, BigInt>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int da = a.first.q + a.first.t, db = b.first.q + b.first.t;
    if (da != db) return da < db;
    return a.first.q > b.first.q;
  });
  return out;
}

namespace {

std::string variable_power(char var, int exponent) {
  if (exponent == 0) return {};
  if (exponent == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(exponent);
}

}  // namespace

std::string QTPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : canonical_terms()) {
    BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::string vars = variable_power('q', e.q) + variable_power('t', e.t);
    if (vars.empty()) {
      os << magnitude.get_str();
    } else {
      if (magnitude != 1) os << magnitude.get_str();
      os << vars;
    }
  }
  return os.str();
}

QTPolynomial qbinom(int a, int b) {
  if (a < 0 || b < 0 || b > a) return QTPolynomial();
  // Pascal rows in q only: [i choose j] = [i-1 choose j-1] + q^j [i-1 choose j].
  std::vector<std::vector<BigInt>> row(static_cast<std::size_t>(b) + 1);
  row[0] = {BigInt(1)};
  for (int i = 1; i <= a; ++i) {
    std::vector<std::vector<BigInt>> next(row.size());
    next[0] = {BigInt(1)};
    for (int j = 1; j <= std::min(i, b); ++j) {
      const auto& left = row[j - 1];
      const auto& up = row[j];
      std::vector<BigInt> cur(std::max(left.size(), up.size() + static_cast<std::size_t>(j)));
      for (std::size_t d = 0; d < left.size(); ++d) cur[d] += left[d];
      for (std::size_t d = 0; d < up.size(); ++d) cur[d + j] += up[d];
      next[j] = std::move(cur);
    }
    row = std::move(next);
  }
  QTPolynomial p;
  for (std::size_t d = 0; d < row[b].size(); ++d) p.add_term(static_cast<int>(d), 0, row[b][d]);
  return p;
}

std::vector<long> small_primes(int count) {
  std::vector<long> primes;
  for (long candidate = 2; static_cast<int>(primes.size()) < count; ++candidate) {
    bool prime = true;
    for (long p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

std::vector<BigRational> q_interpolation_nodes(int count) {
  auto primes = small_primes(2 * count);
  std::vector<BigRational> nodes;
  for (int i = 0; i < count; ++i) nodes.push_back(make_rational(primes[2 * i]));
  return nodes;
}

std::vector<BigRational> t_interpolation_nodes(int count) {
  auto primes = small_primes(2 * count);
  std::vector<BigRational> nodes;
  for (int i = 0; i < count; ++i) nodes.push_back(make_rational(primes[2 * i + 1]));
  return nodes;
}

std::vector<BigRational> interpolate_univariate(const std::vector<BigRational>& nodes,
                                                const std::vector<BigRational>& values) {
  const std::size_t n = nodes.size();
  if (values.size() != n) throw std::invalid_argument("node/value size mismatch");
  // Newton divided differences, then expand the Newton form.
  std::vector<BigRational> dd = values;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const BigRational denom = nodes[i] - nodes[i - level];
      if (denom == 0) throw InterpolationError("repeated interpolation node");
      dd[i] = (dd[i] - dd[i - 1]) / denom;
      if (i == level) break;
    }
  }
  std::vector<BigRational> coeffs(n, BigRational(0));
  for (std::size_t k = n; k-- > 0;) {
    // coeffs <- coeffs * (x - nodes[k]) + dd[k]
    for (std::size_t d = n - 1; d > 0; --d) coeffs[d] = coeffs[d - 1] - nodes[k] * coeffs[d];
    coeffs[0] = dd[k] - nodes[k] * coeffs[0];
  }
  for (auto& c : coeffs) c.canonicalize();
  return coeffs;
}

QTPolynomial interpolate(const PointEvaluator& evaluator, int deg_q_bound, int deg_t_bound) {
  if (deg_q_bound < 0 || deg_t_bound < 0) throw std::invalid_argument("negative degree bound");
  const auto qs = q_interpolation_nodes(deg_q_bound + 1);
  const auto ts = t_interpolation_nodes(deg_t_bound + 1);

  // For every q node, recover the t-coefficients; then interpolate each
  // t-coefficient across the q nodes.
  std::vector<std::vector<BigRational>> t_coeffs;
  t_coeffs.reserve(qs.size());
  for (const auto& q0 : qs) {
    std::vector<BigRational> values;
    values.reserve(ts.size());
    for (const auto& t0 : ts) values.push_back(evaluator(q0, t0));
    t_coeffs.push_back(interpolate_univariate(ts, values));
  }

  QTPolynomial result;
  for (int b = 0; b <= deg_t_bound; ++b) {
    std::vector<BigRational> values;
    for (const auto& row : t_coeffs) values.push_back(row[b]);
    const auto q_coeffs = interpolate_univariate(qs, values);
    for (int a = 0; a <= deg_q_bound; ++a) {
      const auto& c = q_coeffs[a];
      if (!is_integer(c))
        throw InterpolationError("non-integer coefficient " + c.get_str() + " at q^" + std::to_string(a) +
                                 " t^" + std::to_string(b) + "; degree bound too small or evaluator inconsistent");
      result.add_term(a, b, c.get_num());
    }
  }
  return result;
}

}  // namespace polyo
