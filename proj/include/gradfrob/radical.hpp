#pragma once

// Jacobson radical through the trace form, and a partial locality test.

#include <stdexcept>
#include <string>
#include <vector>

#include "gradfrob/algebra.hpp"

namespace gradfrob {

class UnsupportedCharacteristic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Radical of (x, y) -> tr(L_x L_y), which is J(B) in characteristic 0 and
/// over F_p with p > dim B. The grading is ignored. Throws
/// UnsupportedCharacteristic otherwise.
std::vector<Vector> jacobson_radical(const GradedAlgebra& b);

struct LocalResult {
  enum class Outcome { yes, no, unsupported };
  Outcome outcome = Outcome::unsupported;
  /// dim B / J(B).
  std::size_t quotient_dim = 0;
  std::string note;
};

/// yes when dim B/J = 1. Over F_p, B/J is enumerated when it has at most
/// 10^6 elements. Over Q a nonzero non-invertible element of B/J with small
/// integer coordinates proves no; otherwise the answer is unsupported.
LocalResult is_local(const GradedAlgebra& b);

}  // namespace gradfrob
