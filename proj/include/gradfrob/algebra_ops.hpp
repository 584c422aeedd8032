#pragma once

// Algebra-level constructions and queries: tensor products, regradings,
// centralizers and the graded-division test.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradfrob/algebra.hpp"

namespace gradfrob {

/// (a (x) b)(a' (x) b') = aa' (x) bb', degree deg a . deg b. Basis vector
/// a_i (x) b_j has index i * dim(B) + j. Throws std::invalid_argument on
/// field or group mismatch, or when some pair of support elements does not
/// commute.
GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b);

/// Block product A x B over the same group; B's basis follows A's.
GradedAlgebra direct_product(const GradedAlgebra& a, const GradedAlgebra& b);

/// A_H over H. Basis: the basis vectors of A whose degree lies in H, in
/// their original order. Throws GroupError when H is not a subgroup.
GradedAlgebra restrict_to_subgroup(const GradedAlgebra& a, std::span<const GroupElement> h);

/// Basis indices of A kept by restrict_to_subgroup.
std::vector<std::size_t> restricted_basis(const GradedAlgebra& a, std::span<const GroupElement> h);

/// Same algebra graded by G/N. Throws GroupError unless N is normal.
GradedAlgebra coarsen_grading(const GradedAlgebra& a, std::span<const GroupElement> normal);

/// Same algebra graded by the trivial group.
GradedAlgebra forget_grading(const GradedAlgebra& a);

/// Regrade along a homomorphism f: G -> H (f[g] is the image of g).
/// Throws std::invalid_argument when f is not a homomorphism.
GradedAlgebra push_grading(const GradedAlgebra& a, const FiniteGroup& h,
                           std::span<const GroupElement> f);

/// Basis of {x : xs = sx for every s in S}.
std::vector<Vector> centralizer(const GradedAlgebra& a, std::span<const Vector> s);
std::vector<Vector> center(const GradedAlgebra& a);

/// Some z has yz = zy = 1.
bool is_unit(const GradedAlgebra& a, const Vector& y);

struct GradedDivisionResult {
  enum class Outcome { yes, no, unsupported };
  Outcome outcome = Outcome::unsupported;
  /// Nonzero homogeneous non-unit when outcome is no.
  std::optional<Vector> witness;
  std::optional<GroupElement> witness_degree;
  std::string note;
};

/// Every homogeneous basis vector is tested first, so a non-unit there is a
/// certified no in all cases. A yes is then certain when every component has
/// dimension at most 1, or over a finite field when the nonzero elements of
/// all components number at most 10^6 and are enumerated. Anything else is
/// unsupported.
GradedDivisionResult is_graded_division(const GradedAlgebra& a);

}  // namespace gradfrob
