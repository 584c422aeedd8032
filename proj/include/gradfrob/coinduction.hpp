#pragma once

// The degree-e subalgebra, homogeneous components as A_e-modules, the
// coinduced module Coind(N) = Hom_{A_e}(A, N) and the adjunction unit nu_M.

#include <vector>

#include "gradfrob/module.hpp"

namespace gradfrob {

/// A_e as a standalone algebra over the trivial group. Basis vector k of
/// `algebra` is basis vector embedding[k] of A.
struct IdentityComponent {
  GradedAlgebra algebra;
  std::vector<std::size_t> embedding;
};

IdentityComponent identity_component(const GradedAlgebra& a);

/// A_g as a left (multiplication from the left) or right A_e-module.
GradedModule component_module(const GradedAlgebra& a, const IdentityComponent& ae, GroupElement g,
                              Side side);

/// M_g as a left A_e-module; M must be a graded left A-module.
GradedModule module_component(const GradedModule& m, const IdentityComponent& ae, GroupElement g);

struct CoinducedModule {
  GradedModule module;
  /// maps[k]: the k-th basis element as an n x dim(A) matrix, i.e. the
  /// A_e-linear map A -> N it stands for.
  std::vector<Matrix> maps;
};

/// Graded left A-module of A_e-linear maps f: A -> N with (a.f)(r) = f(r a);
/// the degree-g part consists of the maps vanishing off A_{g^{-1}}.
/// Throws std::invalid_argument unless N is a left module over A_e.
CoinducedModule coinduce(const GradedAlgebra& a, const GradedModule& n);

/// nu_M: M -> Coind(M_sigma)(sigma^{-1}), nu(x)(a) = a_{sigma lambda^{-1}} x
/// for x of degree lambda. M must be a graded left module.
GradedLinearMap nu_map(const GradedModule& m, GroupElement sigma);

/// Kernel of nu_M, i.e. the largest graded submodule with zero degree-sigma
/// part. Basis vectors are homogeneous; degrees[k] is the degree of basis[k].
struct TorsionRadical {
  std::vector<Vector> basis;
  std::vector<GroupElement> degrees;
};

TorsionRadical torsion_radical(const GradedModule& m, GroupElement sigma);

}  // namespace gradfrob
