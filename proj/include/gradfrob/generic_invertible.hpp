#pragma once

// Decides whether a linear space of d x d matrices, given by a spanning list,
// contains an invertible member.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gradfrob/matrix.hpp"

namespace gradfrob {

struct SearchBudget {
  std::size_t trials = 64;
  /// Sample integers from [-bound, bound] over Q; 0 means 4d.
  std::uint64_t sample_bound = 0;
  /// Largest (d+1)^m grid for which a certified answer is attempted.
  std::uint64_t exhaustive_limit = 1'000'000;
};

struct GenericInvertibilityVerdict {
  enum class Outcome { witness_found, certified_absent, probabilistic_absent };

  Outcome outcome = Outcome::certified_absent;
  /// One coefficient per input matrix; the witness is their combination.
  Vector coefficients;
  std::optional<Matrix> witness;
  /// (d / |sample set|)^trials, capped at 1; only for probabilistic_absent.
  std::optional<mpq_class> error_bound;
  std::size_t trials_used = 0;
};

/// Certified search happens when every spanning matrix is singular and the
/// interpolation grid (d+1)^m fits in `exhaustive_limit` (m = dim of the
/// span). det is homogeneous of degree d, so it vanishes identically iff it
/// vanishes on {(y, 1) : y in N^(m-1), |y| <= d}, a unisolvent set for total
/// degree d when the characteristic is 0 or exceeds d. For F_p with p <= d
/// the whole projective space P^(m-1)(F_p) is scanned instead, which decides
/// existence over F_p itself.
///
/// Throws std::invalid_argument on an empty list or mixed shapes/fields.
GenericInvertibilityVerdict generic_invertible(std::span<const Matrix> basis,
                                               const SearchBudget& budget, Rng& rng);

}  // namespace gradfrob
