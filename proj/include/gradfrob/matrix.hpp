#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gradfrob/scalar.hpp"

namespace gradfrob {

/// Coordinate vector; every entry lives in the same field.
using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero_vector(const Vector& v);

/// v <- v + c * w
void add_scaled(Vector& v, const Scalar& c, const Vector& w);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  /// Rows given as vectors of equal length.
  static Matrix from_rows(const Field& field, std::span<const Vector> rows, std::size_t cols);
  /// Columns given as vectors of equal length.
  static Matrix from_columns(const Field& field, std::span<const Vector> cols, std::size_t rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& c);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Vector operator*(const Matrix& lhs, const Vector& v);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace gradfrob
