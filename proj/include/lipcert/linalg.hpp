#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "lipcert/rational.hpp"
#include "lipcert/sqrt.hpp"

namespace lipcert {

/// Non-empty sequence of rationals.
class Vector {
 public:
  /// Throws DimensionError when `elements` is empty.
  explicit Vector(std::vector<Rational> elements);
  Vector(std::initializer_list<Rational> elements) : Vector(std::vector<Rational>(elements)) {}

  std::size_t size() const noexcept { return elements_.size(); }
  const Rational& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const Rational> elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Rational> elements_;
};

/// Non-empty rectangular matrix, stored row-major.
class Matrix {
 public:
  /// Throws DimensionError for an empty or ragged row list.
  explicit Matrix(const std::vector<std::vector<Rational>>& rows);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);
  /// Takes a flat row-major buffer of rows*cols entries.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const {
    return std::span<const Rational>(data_).subspan(r * cols_, cols_);
  }
  Vector row_vector(std::size_t r) const;
  std::span<const Rational> data() const noexcept { return data_; }

  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

Rational dot(std::span<const Rational> v, std::span<const Rational> u);
inline Rational dot(const Vector& v, const Vector& u) { return dot(v.elements(), u.elements()); }

Vector mv_product(const Matrix& m, const Vector& v);
Vector minus(const Vector& v, const Vector& u);
Vector add(const Vector& v, const Vector& u);

/// Exact sum of squared entries.
Rational squared_l2(std::span<const Rational> v);
inline Rational squared_l2(const Vector& v) { return squared_l2(v.elements()); }
Rational squared_frobenius(const Matrix& m);

/// r >= 0 with r*r >= sum of squares of v.
Rational l2_upper_bound(const Vector& v, const SqrtConfig& cfg = {});
/// r >= 0 with r*r >= sum of squares of all entries of m.
Rational frobenius_norm_upper_bound(const Matrix& m, const SqrtConfig& cfg = {});

/// The Gram matrix M^T M. Only the upper triangle is computed; the lower
/// triangle is mirrored, so the result is exactly symmetric.
Matrix mtm(const Matrix& m);

/// Entrywise division; throws DomainError unless r > 0.
Matrix matrix_div(const Matrix& m, const Rational& r);

struct TruncatedMatrix {
  Matrix truncated;
  Matrix error;
};

/// Floors every entry onto the 10^-places grid. The input must be square
/// and symmetric (DomainError otherwise); truncated + error == m exactly.
TruncatedMatrix truncate_with_error(const Matrix& m, unsigned places);

bool is_zero_matrix(const Matrix& m);

}  // namespace lipcert
