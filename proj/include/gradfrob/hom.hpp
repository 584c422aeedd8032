#pragma once

// Degree-preserving module morphisms and graded isomorphism testing.

#include <optional>
#include <string>
#include <vector>

#include "gradfrob/generic_invertible.hpp"
#include "gradfrob/module.hpp"

namespace gradfrob {

class ModuleMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Basis of Hom in the category of graded modules (same side, same algebra).
///
/// M is presented by homogeneous generators g_t and the relations among
/// them (the kernel of (a_t) -> sum a_t g_t). A morphism is then the same
/// thing as a choice of images n_t in N_{deg g_t} that satisfy every
/// relation, which is a much smaller linear system than imposing
/// commutation with every action matrix entrywise.
/// Throws ModuleMismatch on different sides or algebras.
std::vector<GradedLinearMap> graded_hom_basis(const GradedModule& m, const GradedModule& n);

std::size_t graded_hom_dim(const GradedModule& m, const GradedModule& n);

struct IsoVerdict {
  enum class Outcome { isomorphic, certified_absent, probabilistic_absent };

  /// What rules an isomorphism out when outcome is certified_absent.
  enum class Obstruction { none, component_dims, hom_dimension, no_homomorphism, determinant_zero };

  Outcome outcome = Outcome::certified_absent;
  Obstruction obstruction = Obstruction::none;
  /// Bijective, degree-preserving module morphism M -> N.
  std::optional<GradedLinearMap> witness;
  std::optional<mpq_class> error_bound;
  /// Why no isomorphism exists (empty when one was found).
  std::string reason;
};

/// Component dimensions are compared first, then dim Hom(M, N) against
/// dim Hom(M, M) (an isomorphism forces equality), and finally the hom space
/// is searched for an invertible member. A search that only misses
/// randomly compares dim Hom(N, M) with dim Hom(N, N) before giving up.
IsoVerdict graded_iso(const GradedModule& m, const GradedModule& n, const SearchBudget& budget,
                      Rng& rng);

}  // namespace gradfrob
