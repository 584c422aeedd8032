#pragma once

// Builders for the example algebras: trivial extensions, the
// Nakayama-Nesbitt algebra, good and fine gradings on matrix algebras, group
// and skew group algebras, and a random generator composing them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradfrob/algebra.hpp"

namespace gradfrob {

/// Subalgebra of M_n(k) spanned by the given matrices, which must be
/// linearly independent, closed under multiplication and span the identity.
/// Basis vector i is mats[i] with degree degrees[i].
GradedAlgebra algebra_from_matrices(const Field& field, const FiniteGroup& group,
                                    const std::vector<Matrix>& mats,
                                    const std::vector<GroupElement>& degrees);

/// k[x]/(f) trivially graded, basis 1, x, .., x^{n-1}. `coeffs` lists
/// f = x^n + c_{n-1} x^{n-1} + ... + c_0 as (c_0, .., c_{n-1}); n >= 1.
GradedAlgebra polynomial_quotient(const Field& field, const std::vector<Scalar>& coeffs);

/// k[x]/(x^n) with x in degree g, so x^i has degree g^i.
GradedAlgebra truncated_polynomial(const Field& field, std::size_t n, const FiniteGroup& group = {},
                                   GroupElement g = 0);

/// kG with deg(g) = g.
GradedAlgebra group_algebra(const Field& field, const FiniteGroup& group);

/// R + R^* with (r, f)(r', f') = (rr', rf' + fr'). R must be trivially
/// graded. R sits in degree e and R^* in degree `element` of `group`
/// (by default Z2 with R^* in degree 1). Basis: R's basis, then its dual basis.
GradedAlgebra trivial_extension(const GradedAlgebra& r);
GradedAlgebra trivial_extension(const GradedAlgebra& r, const FiniteGroup& group, GroupElement element);

/// Trivial extension of R1 x R2 with R1^* in degree u and R2^* in degree v
/// (Z3 with u = 1, v = 2 by default). Basis: R1, R2, R1^*, R2^*.
GradedAlgebra trivial_extension_split(const GradedAlgebra& r1, const GradedAlgebra& r2);
GradedAlgebra trivial_extension_split(const GradedAlgebra& r1, const GradedAlgebra& r2,
                                      const FiniteGroup& group, GroupElement u, GroupElement v);

/// Basis I, X, Y, Z with XY = uZ, YX = vZ and every other product of X, Y,
/// Z zero, graded by Z4 as 0, 1, 2, 3. Throws std::invalid_argument when u
/// or v is zero.
GradedAlgebra nakayama_nesbitt(const Scalar& u, const Scalar& v);
/// Same algebra with X in degree x and Y in degree y; x and y must commute.
GradedAlgebra nakayama_nesbitt(const Scalar& u, const Scalar& v, const FiniteGroup& group,
                               GroupElement x, GroupElement y);

/// M_n(k) on the matrix units, e_ij (index i * n + j) of degree g_i^{-1} g_j.
GradedAlgebra matrix_good_grading(const Field& field, const FiniteGroup& group,
                                  const std::vector<GroupElement>& degrees);

/// M_n(k) graded by Zn x Zn: X^a Y^b (index a * n + b) has degree (a, b),
/// where X = diag(1, w, .., w^{n-1}), Y is the cyclic shift and w is a
/// primitive n-th root of unity. Throws std::invalid_argument when the field
/// has none.
GradedAlgebra matrix_fine_grading(const Field& field, std::size_t n);

/// Some primitive n-th root of unity, if the field has one.
std::optional<Scalar> primitive_root_of_unity(const Field& field, std::size_t n);

/// R * G with basis r_i # g (index g * dim R + i), (r # g)(s # h) = r g(s) # gh.
/// action[g] is the matrix of g acting on R. Throws std::invalid_argument
/// unless g -> action[g] is a homomorphism into the unital algebra
/// automorphisms of R. R must be trivially graded.
GradedAlgebra skew_group_algebra(const GradedAlgebra& r, const FiniteGroup& group,
                                 const std::vector<Matrix>& action);

/// M_n(A) = A (x) M_n(k), with a e_ij in degree deg a.
GradedAlgebra matrix_over(const GradedAlgebra& a, std::size_t n);

/// Upper triangular 2 x 2 matrices (not Frobenius).
GradedAlgebra upper_triangular(const Field& field);
/// k[x, y]/(x, y)^2 (local, not Frobenius).
GradedAlgebra square_zero_plane(const Field& field);
/// (k x k) * Z2 with the generator swapping the factors; isomorphic to M_2(k).
GradedAlgebra swap_skew_algebra(const Field& field);
/// k[x]/(x^2) * Z2 with the generator acting by x -> -x.
GradedAlgebra sign_skew_algebra(const Field& field);
/// Rational quaternions (-1, -1) tensored with k[x]/(x^2); trivially graded,
/// local with a noncommutative 4-dimensional quotient by the radical.
GradedAlgebra quaternion_dual_numbers(const Field& field);

struct RandomLimits {
  std::size_t max_dim = 8;
  std::size_t max_group_order = 6;
};

/// Reproducible random algebra assembled from the builders above plus
/// tensor products, restrictions and coarsenings; valid by construction.
GradedAlgebra random_graded_algebra(std::uint64_t seed, const Field& field, RandomLimits limits = {});

/// Named builder with string parameters, as used by the `gen` command.
struct ConstructionSpec {
  std::string name;
  std::map<std::string, std::string> params;
};

/// Names accepted by build_construction.
std::vector<std::string> construction_names();

/// Throws std::invalid_argument on unknown names or bad parameters.
GradedAlgebra build_construction(const ConstructionSpec& spec);

}  // namespace gradfrob
