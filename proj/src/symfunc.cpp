#include "polyo/symfunc.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>

namespace polyo {

namespace {

using Matrix = std::vector<std::vector<BigRational>>;

std::mutex cache_mutex;

void generate(int remaining, int max_part, Partition& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    generate(remaining - part, part, current, out);
    current.pop_back();
  }
}

struct PartitionTable {
  std::vector<Partition> list;
  std::map<Partition, int> index;
};

const PartitionTable& partition_table(int d) {
  static std::map<int, PartitionTable> cache;
  std::lock_guard lock(cache_mutex);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  PartitionTable table;
  Partition current;
  generate(d, d, current, table.list);
  for (std::size_t i = 0; i < table.list.size(); ++i) table.index.emplace(table.list[i], static_cast<int>(i));
  return cache.emplace(d, std::move(table)).first->second;
}

void require_degree(int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  if (d > symfunc_max_degree())
    throw DegreeBoundExceeded("degree " + std::to_string(d) + " exceeds the bound " +
                              std::to_string(symfunc_max_degree()));
}

// --- counting the integer transition matrices --------------------------------

// Ways to place rows[idx..] into columns with remaining capacities, where each
// row puts at most `per_cell` (1 for 0-1 matrices, unbounded otherwise) in a cell.
std::int64_t count_matrices(const Partition& rows, std::size_t idx, std::vector<int>& caps, bool zero_one) {
  if (idx == rows.size()) return std::all_of(caps.begin(), caps.end(), [](int c) { return c == 0; }) ? 1 : 0;
  std::int64_t total = 0;
  // Distribute rows[idx] over columns col.. recursively.
  auto distribute = [&](auto&& self, std::size_t col, int left) -> void {
    if (left == 0) {
      total += count_matrices(rows, idx + 1, caps, zero_one);
      return;
    }
    if (col == caps.size()) return;
    const int most = std::min(left, zero_one ? std::min(1, caps[col]) : caps[col]);
    for (int put = most; put >= 0; --put) {
      caps[col] -= put;
      self(self, col + 1, left - put);
      caps[col] += put;
    }
  };
  distribute(distribute, 0, rows[idx]);
  return total;
}

std::int64_t count_part_assignments(const Partition& parts, std::size_t idx, std::vector<int>& caps) {
  if (idx == parts.size()) return std::all_of(caps.begin(), caps.end(), [](int c) { return c == 0; }) ? 1 : 0;
  std::int64_t total = 0;
  for (auto& cap : caps) {
    if (cap < parts[idx]) continue;
    cap -= parts[idx];
    total += count_part_assignments(parts, idx + 1, caps);
    cap += parts[idx];
  }
  return total;
}

// Semistandard tableaux of shape lambda and content mu, peeling off the
// largest letter as a horizontal strip.
std::int64_t kostka(const Partition& lambda, Partition mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  const int strip = mu.back();
  mu.pop_back();
  std::int64_t total = 0;
  Partition nu(lambda.size());
  auto choose = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == lambda.size()) {
      if (left != 0) return;
      Partition trimmed = nu;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      total += kostka(trimmed, mu);
      return;
    }
    const int floor = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (int v = lambda[i]; v >= floor; --v) {
      const int removed = lambda[i] - v;
      if (removed > left) break;
      nu[i] = v;
      self(self, i + 1, left - removed);
    }
  };
  choose(choose, 0, strip);
  return total;
}

std::vector<std::vector<BigInt>> build_expansion(Basis b, int d) {
  const auto& parts = partitions(d);
  const std::size_t size = parts.size();
  std::vector<std::vector<BigInt>> M(size, std::vector<BigInt>(size, 0));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      std::vector<int> caps(parts[j].begin(), parts[j].end());
      std::int64_t value = 0;
      switch (b) {
        case Basis::monomial: value = i == j ? 1 : 0; break;
        case Basis::elementary: value = count_matrices(parts[i], 0, caps, true); break;
        case Basis::homogeneous: value = count_matrices(parts[i], 0, caps, false); break;
        case Basis::powersum: value = count_part_assignments(parts[i], 0, caps); break;
        case Basis::schur: value = kostka(parts[i], parts[j]); break;
        case Basis::macdonald: throw std::logic_error("the Macdonald basis depends on (q,t)");
      }
      M[i][j] = BigInt(static_cast<long>(value));
    }
  return M;
}

// --- modified Macdonald fillings ----------------------------------------------

struct Shape {
  std::vector<int> below;  // cell index directly below, or -1
  std::vector<int> leg;
  std::vector<int> arm;
  std::vector<std::pair<int, int>> attacking;  // (earlier in reading order, later)
};

// Cells are numbered in reading order: top row first, left to right.
Shape shape_of(const Partition& mu) {
  Shape s;
  const int rows = static_cast<int>(mu.size());
  std::vector<std::vector<int>> id(static_cast<std::size_t>(rows));
  int next = 0;
  for (int i = rows - 1; i >= 0; --i)
    for (int j = 0; j < mu[i]; ++j) id[i].push_back(next++);
  s.below.assign(static_cast<std::size_t>(next), -1);
  s.leg.assign(static_cast<std::size_t>(next), 0);
  s.arm.assign(static_cast<std::size_t>(next), 0);
  const Partition conj = conjugate(mu);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < mu[i]; ++j) {
      const int c = id[i][j];
      if (i > 0) s.below[c] = id[i - 1][j];
      s.leg[c] = conj[j] - i - 1;
      s.arm[c] = mu[i] - j - 1;
      for (int k = j + 1; k < mu[i]; ++k) s.attacking.emplace_back(c, id[i][k]);
      if (i > 0)
        for (int k = 0; k < j; ++k) s.attacking.emplace_back(c, id[i - 1][k]);
    }
  return s;
}

QTPolynomial filling_sum(const Partition& mu, const Partition& content) {
  const Shape shape = shape_of(mu);
  std::vector<int> filling;
  for (std::size_t v = 0; v < content.size(); ++v) filling.insert(filling.end(), static_cast<std::size_t>(content[v]), static_cast<int>(v));
  std::vector<std::vector<std::int64_t>> counts;
  do {
    int inv = 0, maj = 0;
    for (const auto& [u, v] : shape.attacking) inv += filling[u] > filling[v] ? 1 : 0;
    for (std::size_t c = 0; c < filling.size(); ++c) {
      const int b = shape.below[c];
      if (b >= 0 && filling[c] > filling[b]) {
        maj += shape.leg[c] + 1;
        inv -= shape.arm[c];
      }
    }
    if (static_cast<std::size_t>(inv) >= counts.size()) counts.resize(static_cast<std::size_t>(inv) + 1);
    auto& row = counts[inv];
    if (static_cast<std::size_t>(maj) >= row.size()) row.resize(static_cast<std::size_t>(maj) + 1, 0);
    ++row[maj];
  } while (std::next_permutation(filling.begin(), filling.end()));
  QTPolynomial p;
  for (std::size_t a = 0; a < counts.size(); ++a)
    for (std::size_t b = 0; b < counts[a].size(); ++b)
      if (counts[a][b]) p.add_term(static_cast<int>(a), static_cast<int>(b), BigInt(static_cast<long>(counts[a][b])));
  return p;
}

// --- exact linear algebra -------------------------------------------------------

// Gauss-Jordan inverse; returns false when singular.
bool invert(Matrix a, Matrix& inverse) {
  const std::size_t n = a.size();
  inverse.assign(n, std::vector<BigRational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inverse[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    std::swap(inverse[pivot], inverse[col]);
    const BigRational scale = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inverse[col][j] *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const BigRational factor = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= factor * a[col][j];
        inverse[row][j] -= factor * inverse[col][j];
      }
    }
  }
  return true;
}

std::vector<BigRational> row_times(const std::vector<BigRational>& v, const Matrix& M) {
  std::vector<BigRational> out(M.empty() ? 0 : M[0].size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * M[i][j];
  }
  return out;
}

// e_k and h_k of a finite alphabet of values.
BigRational elementary_of(const std::vector<BigRational>& values, int k) {
  if (k < 0) return 0;
  std::vector<BigRational> e(static_cast<std::size_t>(k) + 1, 0);
  e[0] = 1;
  for (const auto& v : values)
    for (int j = k; j >= 1; --j) e[j] += v * e[j - 1];
  return e[k];
}

BigRational homogeneous_of(const std::vector<BigRational>& values, int k) {
  if (k < 0) return 0;
  std::vector<BigRational> h(static_cast<std::size_t>(k) + 1, 0);
  h[0] = 1;
  for (const auto& v : values)
    for (int j = 1; j <= k; ++j) h[j] += v * h[j - 1];
  return h[k];
}

}  // namespace

// -------------------------------------------------------------------------------

const std::vector<Partition>& partitions(int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  return partition_table(d).list;
}

int partition_index(const Partition& lambda) {
  const auto& table = partition_table(partition_size(lambda));
  auto it = table.index.find(lambda);
  if (it == table.index.end()) throw std::invalid_argument("not a partition: " + to_string(lambda));
  return it->second;
}

Partition make_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (!parts.empty() && parts.back() < 0) throw std::invalid_argument("negative part");
  return parts;
}

Partition conjugate(const Partition& lambda) {
  Partition out;
  for (int i = 1; !lambda.empty() && i <= lambda[0]; ++i)
    out.push_back(static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [i](int p) { return p >= i; })));
  return out;
}

int partition_size(const Partition& lambda) {
  int total = 0;
  for (int p : lambda) total += p;
  return total;
}

BigInt z_lambda(const Partition& lambda) {
  BigInt z = 1;
  std::map<int, int> mult;
  for (int p : lambda) ++mult[p];
  for (const auto& [part, count] : mult)
    for (int i = 1; i <= count; ++i) z *= part * i;
  return z;
}

std::string to_string(const Partition& lambda) {
  std::string out = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) out += (i ? "," : "") + std::to_string(lambda[i]);
  return out + ")";
}

Partition hook(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("hook needs 0 <= k <= n");
  Partition p{k + 1};
  p.insert(p.end(), static_cast<std::size_t>(n - k), 1);
  return p;
}

int symfunc_max_degree() {
  static const int bound = [] {
    if (const char* env = std::getenv("POLYO_SYMFUNC_MAX_DEGREE")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 0 && v <= 20) return static_cast<int>(v);
    }
    return 8;
  }();
  return bound;
}

std::string to_string(Basis b) {
  switch (b) {
    case Basis::monomial: return "monomial";
    case Basis::elementary: return "elementary";
    case Basis::homogeneous: return "homogeneous";
    case Basis::powersum: return "powersum";
    case Basis::schur: return "schur";
    case Basis::macdonald: return "macdonald";
  }
  return "?";
}

bool SymFunc::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const BigRational& c) { return c == 0; });
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  if (other.degree != degree || other.basis != basis) throw std::invalid_argument("adding symmetric functions in different spaces");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += other.coeffs[i];
  return *this;
}

SymFunc& SymFunc::operator*=(const BigRational& factor) {
  for (auto& c : coeffs) c *= factor;
  return *this;
}

SymFunc zero(int degree, Basis b) {
  require_degree(degree);
  return SymFunc{degree, b, std::vector<BigRational>(partitions(degree).size(), 0)};
}

SymFunc basis_element(Basis b, const Partition& lambda) {
  SymFunc f = zero(partition_size(lambda), b);
  f.coeffs[partition_index(lambda)] = 1;
  return f;
}

const std::vector<std::vector<BigInt>>& monomial_expansion(Basis b, int d) {
  require_degree(d);
  static std::map<std::pair<Basis, int>, std::vector<std::vector<BigInt>>> cache;
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find({b, d});
    if (it != cache.end()) return it->second;
  }
  auto built = build_expansion(b, d);
  std::lock_guard lock(cache_mutex);
  return cache.emplace(std::make_pair(b, d), std::move(built)).first->second;
}

const std::vector<std::vector<QTPolynomial>>& macdonald_monomial_table(int d) {
  require_degree(d);
  static std::map<int, std::vector<std::vector<QTPolynomial>>> cache;
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  const auto& parts = partitions(d);
  std::vector<std::vector<QTPolynomial>> table(parts.size(), std::vector<QTPolynomial>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) table[i][j] = filling_sum(parts[i], parts[j]);
  std::lock_guard lock(cache_mutex);
  return cache.emplace(d, std::move(table)).first->second;
}

QTPolynomial macdonald_B(const Partition& mu) {
  QTPolynomial b;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (int j = 0; j < mu[i]; ++j) b.add_term(j, static_cast<int>(i), 1);
  return b;
}

// --- context ---------------------------------------------------------------------

struct SymContext::DegreeData {
  std::map<Basis, Matrix> to_m;
  std::map<Basis, Matrix> from_m;
};

SymContext::SymContext(BigRational q, BigRational t) : q_(std::move(q)), t_(std::move(t)) {}

SymContext::DegreeData& SymContext::data(int d) {
  require_degree(d);
  auto& slot = degrees_[d];
  if (!slot) slot = std::make_shared<DegreeData>();
  return *slot;
}

const Matrix& SymContext::to_monomial(Basis b, int d) {
  auto& dd = data(d);
  auto it = dd.to_m.find(b);
  if (it != dd.to_m.end()) return it->second;
  Matrix M;
  if (b == Basis::macdonald) {
    for (const auto& row : macdonald_monomial_table(d)) {
      auto& out = M.emplace_back();
      for (const auto& poly : row) out.push_back(poly.eval(q_, t_));
    }
  } else {
    for (const auto& row : monomial_expansion(b, d)) {
      auto& out = M.emplace_back();
      for (const auto& c : row) out.emplace_back(c);
    }
  }
  return dd.to_m.emplace(b, std::move(M)).first->second;
}

const Matrix& SymContext::from_monomial(Basis b, int d) {
  auto& dd = data(d);
  auto it = dd.from_m.find(b);
  if (it != dd.from_m.end()) return it->second;
  Matrix inverse;
  if (!invert(to_monomial(b, d), inverse)) {
    if (b == Basis::macdonald)
      throw SingularPoint("modified Macdonald basis is singular at q=" + q_.get_str() + ", t=" + t_.get_str());
    throw std::logic_error("classical transition matrix is singular");
  }
  return dd.from_m.emplace(b, std::move(inverse)).first->second;
}

SymFunc SymContext::convert(const SymFunc& f, Basis target) {
  if (f.basis == target) return f;
  std::vector<BigRational> m = row_times(f.coeffs, to_monomial(f.basis, f.degree));
  if (target == Basis::monomial) return SymFunc{f.degree, target, std::move(m)};
  return SymFunc{f.degree, target, row_times(m, from_monomial(target, f.degree))};
}

BigRational SymContext::hall(const SymFunc& f, const SymFunc& g) {
  if (f.degree != g.degree) return 0;
  const SymFunc fp = convert(f, Basis::powersum);
  const SymFunc gp = convert(g, Basis::powersum);
  const auto& parts = partitions(f.degree);
  BigRational total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (fp.coeffs[i] != 0 && gp.coeffs[i] != 0) total += fp.coeffs[i] * gp.coeffs[i] * BigRational(z_lambda(parts[i]));
  return total;
}

SymFunc SymContext::pleth_scale(const SymFunc& f, int r) {
  if (r < 1) throw std::invalid_argument("pleth_scale needs r >= 1");
  SymFunc fp = convert(f, Basis::powersum);
  const auto& parts = partitions(f.degree);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (fp.coeffs[i] == 0) continue;
    // p_k -> p_k (1 + q^k + ... + q^{k(r-1)})
    for (int k : parts[i]) {
      BigRational sum = 0;
      const BigRational step = power(q_, static_cast<unsigned>(k));
      BigRational term = 1;
      for (int j = 0; j < r; ++j, term *= step) sum += term;
      fp.coeffs[i] *= sum;
    }
  }
  return convert(fp, f.basis);
}

SymFunc SymContext::macdonald_H(const Partition& mu) {
  return convert(basis_element(Basis::macdonald, mu), Basis::monomial);
}

BigRational SymContext::eigenvalue(Generator f, const Partition& mu, bool prime) const {
  if (f.k < 0) return 0;
  if (mu.empty() && prime) {
    // The alphabet B - 1 = -1: e_k[-1] = (-1)^k, h_k[-1] = e_k[1] with a sign.
    if (f.kind == Generator::e) return f.k % 2 == 0 ? 1 : -1;
    return f.k == 0 ? 1 : (f.k == 1 ? -1 : 0);
  }
  std::vector<BigRational> values;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (int j = 0; j < mu[i]; ++j) {
      if (prime && i == 0 && j == 0) continue;
      values.push_back(power(q_, static_cast<unsigned>(j)) * power(t_, static_cast<unsigned>(i)));
    }
  return f.kind == Generator::e ? elementary_of(values, f.k) : homogeneous_of(values, f.k);
}

SymFunc SymContext::apply_eigenvalues(Generator f, const SymFunc& g, bool prime) {
  SymFunc in_h = convert(g, Basis::macdonald);
  const auto& parts = partitions(g.degree);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (in_h.coeffs[i] != 0) in_h.coeffs[i] *= eigenvalue(f, parts[i], prime);
  return convert(in_h, g.basis);
}

SymFunc SymContext::delta(Generator f, const SymFunc& g) { return apply_eigenvalues(f, g, false); }

SymFunc SymContext::delta_prime(Generator f, const SymFunc& g) { return apply_eigenvalues(f, g, true); }

}  // namespace polyo
