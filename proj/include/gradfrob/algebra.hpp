#pragma once

// Group-graded associative algebras given by structure constants on a
// homogeneous basis b_0..b_{d-1}:  b_i b_j = sum_k c_ij^k b_k.

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradfrob/group.hpp"
#include "gradfrob/matrix.hpp"

namespace gradfrob {

struct Term {
  std::size_t index;
  Scalar coeff;
};

class AlgebraError : public std::invalid_argument {
 public:
  explicit AlgebraError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class GradedAlgebra {
 public:
  class Builder {
   public:
    Builder(const Field& field, const FiniteGroup& group, std::size_t dim);

    /// Basis vectors default to the neutral degree.
    Builder& degree(std::size_t i, GroupElement g);
    Builder& unit(Vector u);
    /// Adds c to c_ij^k. Throws std::out_of_range on bad indices.
    Builder& product(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

    /// No validation; pair with validate_algebra.
    GradedAlgebra build_unchecked() const;
    /// Throws AlgebraError when validate_algebra reports anything.
    GradedAlgebra build() const;

   private:
    Field field_;
    FiniteGroup group_;
    std::size_t dim_;
    std::vector<GroupElement> deg_;
    Vector unit_;
    bool has_unit_ = false;
    std::vector<Vector> products_;  // dense, indexed i * dim + j
  };

  /// The zero-dimensional algebra over the trivial group.
  GradedAlgebra();

  const Field& field() const noexcept;
  const FiniteGroup& group() const noexcept;
  std::size_t dim() const noexcept;
  GroupElement degree(std::size_t i) const;
  const std::vector<GroupElement>& degrees() const noexcept;
  const Vector& unit() const noexcept;

  /// b_i b_j as sparse terms.
  std::span<const Term> product(std::size_t i, std::size_t j) const;
  Vector multiply(const Vector& x, const Vector& y) const;

  /// Matrix of y -> b_i y (column j holds b_i b_j).
  const Matrix& left_action(std::size_t i) const;
  /// Matrix of y -> y b_i (column j holds b_j b_i).
  const Matrix& right_action(std::size_t i) const;
  Matrix left_multiplication(const Vector& x) const;
  Matrix right_multiplication(const Vector& x) const;

  /// Basis indices of degree g, increasing.
  std::vector<std::size_t> component(GroupElement g) const;
  /// dim A_g for every g in the group.
  std::vector<std::size_t> component_dims() const;
  std::vector<GroupElement> support() const;

  /// Pointer-equal or structurally equal.
  friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b);

 private:
  struct Impl;
  explicit GradedAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Empty iff the algebra is associative, unital with the unit in degree e,
/// and its structure constants respect the grading. Each entry names the
/// failing constraint.
std::vector<std::string> validate_algebra(const GradedAlgebra& a);

/// Coordinates of the i-th basis vector.
inline Vector basis_vector(const GradedAlgebra& a, std::size_t i) {
  return unit_vector(a.field(), a.dim(), i);
}

}  // namespace gradfrob
