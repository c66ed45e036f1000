#include "jacobi/lattice.hpp"

#include "jacobi/errors.hpp"
#include "jacobi/parallel.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace jacobi {

namespace {

RationalMatrix to_rational(const std::vector<std::vector<long>>& a) {
  RationalMatrix out(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a[i][j];
  return out;
}

/// Q(x) = sum_i q_ii (x_i + sum_{j > i} q_ij x_j)^2.
std::vector<std::vector<double>> quadratic_completion(const std::vector<std::vector<long>>& gram) {
  const std::size_t n = gram.size();
  std::vector<std::vector<double>> q(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = static_cast<double>(gram[i][j]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  return q;
}

long exact_norm(const std::vector<std::vector<long>>& gram, const std::vector<long>& x) {
  long out = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    long row = 0;
    for (std::size_t j = 0; j < x.size(); ++j) row += gram[i][j] * x[j];
    out += x[i] * row;
  }
  return out;
}

class ShortVectors {
public:
  ShortVectors(const std::vector<std::vector<long>>& gram, long bound)
      : gram_(gram), q_(quadratic_completion(gram)), limit_(2 * bound), x_(gram.size(), 0) {}

  /// Integer range of the last coordinate.
  std::pair<long, long> last_range() const {
    const std::size_t i = x_.size() - 1;
    const double radius = std::sqrt((static_cast<double>(limit_) + kSlack) / q_[i][i]);
    return {static_cast<long>(std::ceil(-radius - kSlack)), static_cast<long>(std::floor(radius + kSlack))};
  }

  template <class F>
  void run_with_last(long last, F&& fn) {
    const std::size_t i = x_.size() - 1;
    x_[i] = last;
    const double rest = static_cast<double>(limit_) + kSlack - q_[i][i] * static_cast<double>(last) * static_cast<double>(last);
    if (rest < 0) return;
    descend(i, rest, fn);
  }

private:
  static constexpr double kSlack = 1e-6;

  template <class F>
  void descend(std::size_t fixed, double remaining, F& fn) {
    if (fixed == 0) {
      if (exact_norm(gram_, x_) <= limit_) fn(x_);
      return;
    }
    const std::size_t i = fixed - 1;
    double center = 0;
    for (std::size_t j = i + 1; j < x_.size(); ++j) center -= q_[i][j] * static_cast<double>(x_[j]);
    const double radius = std::sqrt(std::max(remaining, 0.0) / q_[i][i]);
    const long lo = static_cast<long>(std::ceil(center - radius - kSlack));
    const long hi = static_cast<long>(std::floor(center + radius + kSlack));
    for (long v = lo; v <= hi; ++v) {
      x_[i] = v;
      const double t = static_cast<double>(v) - center;
      const double next = remaining - q_[i][i] * t * t;
      if (next < -kSlack) continue;
      descend(i, next, fn);
    }
    x_[i] = 0;
  }

  const std::vector<std::vector<long>>& gram_;
  std::vector<std::vector<double>> q_;
  long limit_;
  std::vector<long> x_;
};

}  // namespace

LatticeSpec::LatticeSpec(std::vector<std::vector<long>> gram_, std::vector<std::vector<long>> vectors_)
    : gram(std::move(gram_)), vectors(std::move(vectors_)) {
  const std::size_t n = gram.size();
  if (n == 0) throw ShapeMismatch("lattice of rank 0");
  if (n % 2 != 0) throw OddRank("theta series needs even rank, got " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw InvalidIndex("Gram matrix must be square");
    if (gram[i][i] % 2 != 0) throw InvalidIndex("Gram matrix must have even diagonal");
    for (std::size_t j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i]) throw InvalidIndex("Gram matrix must be symmetric");
  }
  const RationalMatrix g = to_rational(gram);
  if (!is_positive_semidefinite(g) || is_zero(g.determinant())) throw InvalidIndex("Gram matrix must be positive definite");
  if (vectors.empty()) throw ShapeMismatch("at least one elliptic vector is needed");
  for (const auto& v : vectors)
    if (v.size() != n) throw ShapeMismatch("elliptic vector has the wrong length");
}

HalfIntSymMatrix LatticeSpec::index() const {
  std::vector<std::vector<long>> two_m(h(), std::vector<long>(h(), 0));
  for (std::size_t a = 0; a < h(); ++a)
    for (std::size_t b = 0; b < h(); ++b)
      for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) two_m[a][b] += vectors[a][i] * gram[i][j] * vectors[b][j];
  return HalfIntSymMatrix::from_twice(two_m);
}

std::vector<std::vector<long>> e8_gram() {
  std::vector<std::vector<long>> g(8, std::vector<long>(8, 0));
  for (std::size_t i = 0; i < 8; ++i) g[i][i] = 2;
  const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (const auto& e : edges) g[e[0]][e[1]] = g[e[1]][e[0]] = -1;
  return g;
}

LatticeSpec e8_lattice(std::size_t h) {
  static const std::size_t order[] = {0, 2, 3, 4, 5, 6, 7, 1};
  if (h == 0 || h > 8) throw ShapeMismatch("E8 supports 1 <= h <= 8");
  std::vector<std::vector<long>> vectors;
  for (std::size_t j = 0; j < h; ++j) {
    std::vector<long> v(8, 0);
    v[order[j]] = 1;
    vectors.push_back(std::move(v));
  }
  return LatticeSpec(e8_gram(), std::move(vectors));
}

double estimated_vector_count(const LatticeSpec& lattice, long bound) {
  const double n = static_cast<double>(lattice.rank());
  const double det = to_double(to_rational(lattice.gram).determinant());
  const double ball = std::pow(std::numbers::pi, n / 2) / std::tgamma(n / 2 + 1);
  return ball * std::pow(2.0 * static_cast<double>(std::max(bound, 0L)), n / 2) / std::sqrt(det);
}

void for_each_short_vector(const std::vector<std::vector<long>>& gram, long bound,
                           const std::function<void(const std::vector<long>&)>& fn) {
  if (bound < 0) return;
  ShortVectors sv(gram, bound);
  const auto [lo, hi] = sv.last_range();
  for (long last = lo; last <= hi; ++last) sv.run_with_last(last, fn);
}

JacobiFormData theta_series(const LatticeSpec& lattice, long bound, double max_vectors) {
  if (bound < 0) throw DomainError("truncation bound must be non-negative");
  if (const double estimate = estimated_vector_count(lattice, bound); estimate > max_vectors)
    throw TruncationTooLarge("about " + std::to_string(static_cast<long long>(estimate)) + " lattice vectors for bound " +
                             std::to_string(bound) + " exceed the limit");
  const std::size_t h = lattice.h();
  const std::size_t n = lattice.rank();
  // Gv_j, so that r_j = x' (G v_j).
  std::vector<std::vector<long>> gv(h, std::vector<long>(n, 0));
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gv[a][i] += lattice.gram[i][j] * lattice.vectors[a][j];

  using Counts = std::map<std::pair<long, std::vector<long>>, long>;
  const auto [lo, hi] = ShortVectors(lattice.gram, bound).last_range();
  std::vector<Counts> partial(static_cast<std::size_t>(hi - lo + 1));
  parallel_for(partial.size(), [&](std::size_t slot) {
    ShortVectors sv(lattice.gram, bound);
    Counts& counts = partial[slot];
    std::vector<long> r(h);
    sv.run_with_last(lo + static_cast<long>(slot), [&](const std::vector<long>& x) {
      for (std::size_t a = 0; a < h; ++a) {
        r[a] = 0;
        for (std::size_t i = 0; i < n; ++i) r[a] += x[i] * gv[a][i];
      }
      ++counts[{exact_norm(lattice.gram, x) / 2, r}];
    });
  });

  FourierPoly coeffs(h, 0, 1);
  for (const auto& counts : partial)
    for (const auto& [key, c] : counts) coeffs.add_scalar(FourierMode{Rational(key.first), key.second}, Rational(c));
  return JacobiFormData(static_cast<int>(n / 2), 0, lattice.index(), 1, bound, std::move(coeffs));
}

}  // namespace jacobi
