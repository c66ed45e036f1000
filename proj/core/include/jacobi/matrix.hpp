#pragma once

#include "jacobi/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jacobi {

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  bool is_symmetric() const;

  /// Exact inverse by Gauss-Jordan elimination; std::nullopt when singular.
  std::optional<RationalMatrix> inverse() const;
  Rational determinant() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact positive semi-definiteness of a symmetric rational matrix by
/// symmetric elimination. A zero pivot forces its whole row to vanish.
bool is_positive_semidefinite(RationalMatrix a);

/// Jacobi index m: symmetric h x h, integral diagonal, 2m integral.
class HalfIntSymMatrix {
public:
  /// Throws InvalidIndex when the matrix is not symmetric half-integral.
  explicit HalfIntSymMatrix(RationalMatrix m);

  /// Builds m from the integral matrix 2m (the on-disk representation).
  static HalfIntSymMatrix from_twice(const std::vector<std::vector<long>>& two_m);
  static HalfIntSymMatrix identity(std::size_t h);

  std::size_t h() const noexcept { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const RationalMatrix& matrix() const noexcept { return m_; }

  bool is_invertible() const noexcept { return inverse_.has_value(); }
  /// Throws SingularIndex when det(m) = 0.
  const RationalMatrix& inverse() const;

  /// Entries of 2m as machine integers.
  std::vector<std::vector<long>> twice() const;

  friend bool operator==(const HalfIntSymMatrix& a, const HalfIntSymMatrix& b) { return a.m_ == b.m_; }

private:
  RationalMatrix m_;
  std::optional<RationalMatrix> inverse_;
};

/// Exact m^{-1}; throws SingularIndex.
RationalMatrix invert_index(const HalfIntSymMatrix& m);

/// True iff [[n, r'/2], [r/2, m]] is positive semi-definite.
bool psd_support_check(const Rational& n, std::span<const long> r, const HalfIntSymMatrix& m);

}  // namespace jacobi
