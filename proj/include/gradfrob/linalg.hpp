#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gradfrob/matrix.hpp"

namespace gradfrob {

/// Reduced row echelon form: `rref` has rank() nonzero rows, pivot entries 1.
struct RowEchelon {
  Matrix rref;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Over Q the forward pass is fraction-free (Bareiss on integer-scaled rows);
/// over F_p rows are packed and reduced with the SIMD row kernels.
RowEchelon row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}; empty iff rank(m) == cols(m).
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when inconsistent. Throws
/// std::invalid_argument when b has the wrong length.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Solves m X = b column by column with one elimination.
std::optional<Matrix> solve_columns(const Matrix& m, const Matrix& b);

bool is_invertible(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Incrementally maintained span of vectors of a fixed length.
class Span {
 public:
  Span(const Field& field, std::size_t ambient_dim);

  /// Adds v; returns false when v already lies in the span.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return n_; }
  /// Echelonized basis (not the vectors originally added).
  const std::vector<Vector>& basis() const noexcept { return rows_; }

 private:
  Vector reduce(Vector v) const;

  Field field_;
  std::size_t n_;
  std::vector<Vector> rows_;          // pivot entry 1
  std::vector<std::size_t> pivots_;
};

}  // namespace gradfrob
