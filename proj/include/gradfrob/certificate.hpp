#pragma once

// Machine-checkable witnesses for positive verdicts, their text form, and a
// deterministic verifier.
//
// Text form, one key per line in this order:
//   kind bilinear_form|trace_functional|iso_matrix
//   sigma <group element>
//   field Q|F<p>
//   scope graded|ungraded
//   dim <d>
//   row <d scalars>        (d rows; a single row for trace_functional)

#include <stdexcept>
#include <string>
#include <string_view>

#include "gradfrob/algebra.hpp"

namespace gradfrob {

enum class CertificateKind { iso_matrix, bilinear_form, trace_functional };
/// ungraded: the statement is about the algebra with its grading forgotten.
enum class Scope { graded, ungraded };

std::string to_string(CertificateKind k);
std::string to_string(Scope s);

struct Certificate {
  CertificateKind kind = CertificateKind::bilinear_form;
  GroupElement sigma = 0;
  Field field;
  Scope scope = Scope::graded;
  /// d x d for forms and isomorphisms; 1 x d for a trace functional.
  ///  bilinear_form: payload(i, j) = B(b_i, b_j).
  ///  iso_matrix: column j is theta(b_j) for theta: A(sigma) -> A* on the
  ///    dual basis, so theta(b_j)(b_i) = payload(i, j).
  ///  trace_functional: payload(0, i) = lambda(b_i).
  Matrix payload;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

class CertificateParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string serialize_certificate(const Certificate& c);
/// Throws CertificateParseError with a line number on malformed input.
Certificate parse_certificate(std::string_view text);

struct VerificationResult {
  bool accepted = false;
  /// Empty on acceptance.
  std::string reason;
};

/// Deterministic re-check of the defining conditions:
///  bilinear_form: rank d, B(b_i b_j, b_k) = B(b_i, b_j b_k) for all triples,
///    B(b_i, b_j) = 0 whenever deg b_i deg b_j != sigma;
///  trace_functional: lambda(b_i b_j) = lambda(b_j b_i), lambda vanishes off
///    degree e, and (x, y) -> lambda(xy) has rank d;
///  iso_matrix: a degree-preserving left module map A(sigma) -> A* of rank d.
VerificationResult verify_certificate(const GradedAlgebra& a, const Certificate& c);

}  // namespace gradfrob
