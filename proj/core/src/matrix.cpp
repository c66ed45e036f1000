#include "jacobi/matrix.hpp"

#include "jacobi/errors.hpp"

#include <sstream>
#include <utility>

namespace jacobi {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeMismatch("ragged matrix literal");
    for (const auto& x : row) data_.push_back(x);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) throw ShapeMismatch("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(a(i, col))) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw ShapeMismatch("determinant of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a = *this;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(a(i, col))) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product dimensions");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      if (is_zero(a(i, l))) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, l) * b(l, j);
    }
  return out;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

bool is_positive_semidefinite(RationalMatrix a) {
  if (!a.is_symmetric()) throw ShapeMismatch("PSD test needs a symmetric matrix");
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const int s = sgn(a(k, k));
    if (s < 0) return false;
    if (s == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (!is_zero(a(k, j))) return false;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

HalfIntSymMatrix::HalfIntSymMatrix(RationalMatrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) throw InvalidIndex("Jacobi index must be a non-empty square matrix");
  if (!m_.is_symmetric()) throw InvalidIndex("Jacobi index must be symmetric");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      const Rational twice = 2 * m_(i, j);
      if (!is_integer(twice) || (i == j && !is_integer(m_(i, j))))
        throw InvalidIndex("Jacobi index is not half-integral at (" + std::to_string(i) + ", " + std::to_string(j) +
                           "): " + m_(i, j).get_str());
    }
  inverse_ = m_.inverse();
}

HalfIntSymMatrix HalfIntSymMatrix::from_twice(const std::vector<std::vector<long>>& two_m) {
  const std::size_t h = two_m.size();
  RationalMatrix m(h, h);
  for (std::size_t i = 0; i < h; ++i) {
    if (two_m[i].size() != h) throw InvalidIndex("2m must be square");
    for (std::size_t j = 0; j < h; ++j) m(i, j) = make_rational(two_m[i][j], 2);
  }
  return HalfIntSymMatrix(std::move(m));
}

HalfIntSymMatrix HalfIntSymMatrix::identity(std::size_t h) { return HalfIntSymMatrix(RationalMatrix::identity(h)); }

const RationalMatrix& HalfIntSymMatrix::inverse() const {
  if (!inverse_) throw SingularIndex("Jacobi index " + m_.to_string() + " is singular");
  return *inverse_;
}

std::vector<std::vector<long>> HalfIntSymMatrix::twice() const {
  std::vector<std::vector<long>> out(h(), std::vector<long>(h()));
  for (std::size_t i = 0; i < h(); ++i)
    for (std::size_t j = 0; j < h(); ++j) out[i][j] = Rational(2 * m_(i, j)).get_num().get_si();
  return out;
}

RationalMatrix invert_index(const HalfIntSymMatrix& m) { return m.inverse(); }

bool psd_support_check(const Rational& n, std::span<const long> r, const HalfIntSymMatrix& m) {
  const std::size_t h = m.h();
  if (r.size() != h) throw ShapeMismatch("mode vector length differs from cogenus");
  RationalMatrix block(h + 1, h + 1);
  block(0, 0) = n;
  for (std::size_t i = 0; i < h; ++i) {
    block(0, i + 1) = make_rational(r[i], 2);
    block(i + 1, 0) = block(0, i + 1);
    for (std::size_t j = 0; j < h; ++j) block(i + 1, j + 1) = m(i, j);
  }
  return is_positive_semidefinite(std::move(block));
}

}  // namespace jacobi
