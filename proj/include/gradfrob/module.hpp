#pragma once

// Graded left and right modules over a GradedAlgebra, stored as one action
// matrix per algebra basis vector, and graded linear maps between them.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "gradfrob/algebra.hpp"

namespace gradfrob {

enum class Side { left, right };

std::string to_string(Side s);

class GradedModule {
 public:
  /// action[i] is the m x m matrix of x -> b_i x (left) or x -> x b_i (right).
  /// No validation; see validate_module.
  GradedModule(Side side, GradedAlgebra algebra, std::vector<GroupElement> degrees,
               std::vector<Matrix> action);

  Side side() const noexcept;
  const GradedAlgebra& algebra() const noexcept;
  std::size_t dim() const noexcept;
  GroupElement degree(std::size_t j) const;
  const std::vector<GroupElement>& degrees() const noexcept;
  const Matrix& action(std::size_t i) const;
  /// Action matrix of an arbitrary algebra element.
  Matrix action_of(const Vector& a) const;

  std::vector<std::size_t> component(GroupElement g) const;
  std::vector<std::size_t> component_dims() const;

  friend bool operator==(const GradedModule& a, const GradedModule& b);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Empty iff the unit acts as the identity, the action is associative and
/// respects degrees (deg(b_i x_j) = deg b_i deg x_j on the left,
/// deg x_j deg b_i on the right).
std::vector<std::string> validate_module(const GradedModule& m);

/// A as a graded module over itself by left or right multiplication.
GradedModule regular_module(const GradedAlgebra& a, Side side);

/// Dual basis module on the opposite side; the functional dual to x_j has
/// degree deg(x_j)^{-1}. For left M, (f.a)(x) = f(a x); for right M,
/// (a.f)(x) = f(x a).
GradedModule dual_module(const GradedModule& m);

class SideMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// M(sigma): degree d becomes d sigma^{-1}, so M(sigma)_g = M_{g sigma}.
/// Throws SideMismatch for right modules.
GradedModule suspend_left(const GradedModule& m, GroupElement sigma);
/// (sigma)M: degree d becomes sigma^{-1} d, so ((sigma)M)_g = M_{sigma g}.
/// Throws SideMismatch for left modules.
GradedModule suspend_right(const GradedModule& m, GroupElement sigma);

/// The same action regraded by the trivial group over the regraded algebra.
GradedModule forget_module_grading(const GradedModule& m, const GradedAlgebra& trivial);

struct GradedLinearMap {
  GradedModule source;
  GradedModule target;
  /// target.dim() x source.dim()
  Matrix matrix;
};

/// Commutes with every basis action.
bool is_module_morphism(const GradedLinearMap& f);
/// Sends M_g into N_g for every g.
bool is_degree_preserving(const GradedLinearMap& f);

}  // namespace gradfrob
