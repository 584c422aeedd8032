#pragma once

// Line-oriented text format for graded algebras:
//
//   field Q | field F<p>
//   group cyclic <n> | group product <spec> x <spec> | group table <n> <n^2 entries>
//   dim <d>
//   deg <i> <element>          (default: the neutral element)
//   unit <d scalars>
//   sc <i> <j> <k> <scalar>    (c_ij^k; repeated entries add up)
//
// '#' starts a comment. Product group elements use the mixed-radix index
// a * order(H) + b for the pair (a, b). In a table the neutral element is 0.

#include <stdexcept>
#include <string>
#include <string_view>

#include "gradfrob/algebra.hpp"

namespace gradfrob {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, const std::string& message);
  /// 0 when the problem is not tied to a single line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Words after "group": "cyclic 4", "product cyclic 2 x cyclic 3",
/// "table 2 0 1 1 0". Throws std::invalid_argument.
FiniteGroup parse_group_spec(std::string_view spec);

/// Shorthand used on the command line: "Z4", "C4", "Z2xZ2", "S3", "1";
/// anything else is read by parse_group_spec.
FiniteGroup parse_group_shorthand(std::string_view text);

/// Throws ParseError on syntax errors and on validation failures.
GradedAlgebra parse_algebra_file(std::string_view text);

/// Syntax only: the result may violate the algebra axioms (see
/// validate_algebra). A missing unit line is still an error.
GradedAlgebra parse_algebra_unvalidated(std::string_view text);

/// Inverse of parse_algebra_file; zero structure constants are omitted.
std::string render_algebra(const GradedAlgebra& a);

}  // namespace gradfrob
