#pragma once

// Decision procedures: sigma-faithfulness, sigma-graded Frobenius by three
// independent criteria, graded symmetric, the ungraded properties, inertia
// groups and strong gradings.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradfrob/certificate.hpp"
#include "gradfrob/coinduction.hpp"
#include "gradfrob/hom.hpp"

namespace gradfrob {

enum class Outcome { yes, no, inconclusive };
std::string to_string(Outcome o);

enum class Method { iso, form, component, all };
std::string to_string(Method m);
/// Throws std::invalid_argument on unknown names.
Method parse_method(std::string_view name);

enum class RefutationKind {
  component_dimension_mismatch,
  hom_dimension_mismatch,
  faithfulness_witness,
  torsion_witness,
  certified_determinant_zero,
  probabilistic,
};
std::string to_string(RefutationKind k);

struct Refutation {
  RefutationKind kind;
  std::string detail;
  /// Homogeneous witness vector for faithfulness/torsion refutations.
  std::optional<Vector> witness;
  std::optional<GroupElement> witness_degree;
};

struct Verdict {
  Outcome outcome = Outcome::inconclusive;
  /// "iso", "form", "component", "trace", or "all:<method that decided>".
  std::string method;
  std::optional<Certificate> certificate;
  std::optional<Refutation> refutation;
  /// Set only for uncertified answers: the chance that a randomized search
  /// missed an existing witness.
  std::optional<mpq_class> error_bound;

  bool certified() const { return outcome == Outcome::yes || (outcome == Outcome::no && !error_bound); }
};

/// Raised when criteria the theory proves equivalent return contradicting
/// certified answers; always an implementation bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct FaithfulnessResult {
  bool faithful = true;
  std::optional<Vector> witness;
  std::optional<GroupElement> witness_degree;
};

/// No nonzero a_g is killed by A_{sigma g^{-1}} from the left.
FaithfulnessResult left_sigma_faithful(const GradedAlgebra& a, GroupElement sigma);
/// No nonzero a_g is killed by A_{g^{-1} sigma} from the right.
FaithfulnessResult right_sigma_faithful(const GradedAlgebra& a, GroupElement sigma);

Verdict is_sigma_graded_frobenius(const GradedAlgebra& a, GroupElement sigma, Method method,
                                  const SearchBudget& budget, Rng& rng);

/// Same question through right modules: (sigma)A against the dual of the
/// left regular module.
Verdict is_sigma_graded_frobenius_right(const GradedAlgebra& a, GroupElement sigma,
                                        const SearchBudget& budget, Rng& rng);

struct InertiaResult {
  /// g with A(g) isomorphic to A, sorted.
  std::vector<GroupElement> elements;
  std::map<GroupElement, GradedLinearMap> witnesses;
  /// g whose answer was only probabilistic (not in `elements`).
  std::vector<GroupElement> uncertain;
};

/// Throws InconsistencyError if the certified result is not a subgroup.
InertiaResult inertia_group(const GradedAlgebra& a, const SearchBudget& budget, Rng& rng);

struct ScanResult {
  std::vector<Verdict> verdicts;  // indexed by sigma
  std::vector<GroupElement> yes_set;
  InertiaResult inertia;
  /// False when uncertified answers kept the coset check from running.
  bool coset_checked = false;
};

/// One verdict per group element. Checks that the yes-set is empty or a left
/// coset of the inertia group; throws InconsistencyError if it is not.
ScanResult scan_sigma(const GradedAlgebra& a, Method method, const SearchBudget& budget, Rng& rng);

Verdict is_graded_symmetric(const GradedAlgebra& a, const SearchBudget& budget, Rng& rng);

/// The grading is forgotten; certificates carry scope ungraded.
Verdict is_frobenius(const GradedAlgebra& a, const SearchBudget& budget, Rng& rng,
                     Method method = Method::all);
Verdict is_symmetric(const GradedAlgebra& a, const SearchBudget& budget, Rng& rng);

struct StrongGradingResult {
  bool strongly_graded = true;
  /// Some g with 1 outside span(A_g A_{g^{-1}}).
  std::optional<GroupElement> witness;
};

StrongGradingResult is_strongly_graded(const GradedAlgebra& a);

/// Hyperplane form of a sigma-graded Frobenius structure: H = ker lambda must
/// contain every A_tau (tau != sigma) and no nonzero graded left ideal. True
/// iff both hold for the given functional.
bool hyperplane_criterion_holds(const GradedAlgebra& a, const Vector& lambda, GroupElement sigma);

/// lambda(x) = B(1, x) for a form given as a matrix.
Vector hyperplane_functional(const GradedAlgebra& a, const Matrix& form);

}  // namespace gradfrob
