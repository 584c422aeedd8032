#pragma once

// Test-side oracles. Deliberately naive and independent of the library's
// elimination code: textbook Gaussian elimination on Scalar values with no
// fraction-free tricks and no packed kernels.

#include <string>
#include <vector>

#include "gradfrob/algebra.hpp"
#include "gradfrob/matrix.hpp"

namespace oracle {

using gradfrob::Field;
using gradfrob::GradedAlgebra;
using gradfrob::Matrix;
using gradfrob::Scalar;
using gradfrob::Vector;

inline std::size_t naive_rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    const Scalar inv = m(r, c).inverse();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c) * inv;
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    ++r;
  }
  return r;
}

inline Scalar q(long long n, long long d = 1) {
  return Scalar::from_int(Field::rationals(), n) / Scalar::from_int(Field::rationals(), d);
}

inline Matrix from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = Scalar::from_int(f, rows[r][c]);
  return m;
}

/// Literal check of every defining condition of a sigma-graded Frobenius
/// form: full rank, B(b_i b_j, b_k) = B(b_i, b_j b_k), graded orthogonality.
inline bool form_is_valid(const GradedAlgebra& a, const Matrix& b, std::size_t sigma) {
  const std::size_t d = a.dim();
  if (b.rows() != d || b.cols() != d) return false;
  if (naive_rank(b) != d) return false;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector ij = a.multiply(gradfrob::basis_vector(a, i), gradfrob::basis_vector(a, j));
      for (std::size_t k = 0; k < d; ++k) {
        const Vector jk = a.multiply(gradfrob::basis_vector(a, j), gradfrob::basis_vector(a, k));
        Scalar lhs = Scalar::zero(a.field()), rhs = Scalar::zero(a.field());
        for (std::size_t t = 0; t < d; ++t) {
          lhs += ij[t] * b(t, k);
          rhs += jk[t] * b(i, t);
        }
        if (!(lhs == rhs)) return false;
      }
      if (a.group().mul(a.degree(i), a.degree(j)) != sigma && !b(i, j).is_zero()) return false;
    }
  return true;
}

/// Literal check of a graded symmetrizing functional.
inline bool functional_is_valid(const GradedAlgebra& a, const Vector& lambda) {
  const std::size_t d = a.dim();
  if (lambda.size() != d) return false;
  for (std::size_t t = 0; t < d; ++t)
    if (a.degree(t) != a.group().neutral() && !lambda[t].is_zero()) return false;
  Matrix gram(a.field(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector ij = a.multiply(gradfrob::basis_vector(a, i), gradfrob::basis_vector(a, j));
      const Vector ji = a.multiply(gradfrob::basis_vector(a, j), gradfrob::basis_vector(a, i));
      Scalar x = Scalar::zero(a.field()), y = Scalar::zero(a.field());
      for (std::size_t t = 0; t < d; ++t) {
        x += lambda[t] * ij[t];
        y += lambda[t] * ji[t];
      }
      if (!(x == y)) return false;
      gram(i, j) = x;
    }
  return naive_rank(gram) == d;
}

}  // namespace oracle
