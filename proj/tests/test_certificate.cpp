#include <doctest.h>

#include "gradfrob/certificate.hpp"
#include "gradfrob/constructions.hpp"
#include "gradfrob/frobenius.hpp"
#include "helpers.hpp"

using namespace gradfrob;

namespace {

const Field Q = Field::rationals();

Certificate form_for(const GradedAlgebra& a, GroupElement s) {
  Rng rng(1);
  const Verdict v = is_sigma_graded_frobenius(a, s, Method::form, {}, rng);
  REQUIRE(v.certificate);
  return *v.certificate;
}

}  // namespace

TEST_SUITE("certificate") {

TEST_CASE("serialization round trips") {
  const GradedAlgebra nn = nakayama_nesbitt(oracle::q(1), oracle::q(2));
  for (Method m : {Method::iso, Method::form, Method::component}) {
    Rng rng(3);
    const Verdict v = is_sigma_graded_frobenius(nn, 3, m, {}, rng);
    REQUIRE(v.certificate);
    const std::string text = serialize_certificate(*v.certificate);
    const Certificate c = parse_certificate(text);
    CHECK(c == *v.certificate);
    CHECK(serialize_certificate(c) == text);
    CHECK(verify_certificate(nn, c).accepted);
  }
  Certificate t{CertificateKind::trace_functional, 0, Field::prime(7), Scope::ungraded, oracle::from_ints(Field::prime(7), {{1, 0, 6}})};
  CHECK(parse_certificate(serialize_certificate(t)) == t);
}

TEST_CASE("text layout") {
  Certificate c{CertificateKind::bilinear_form, 1, Q, Scope::graded, Matrix(Q, 2, 2)};
  c.payload(0, 1) = oracle::q(1, 2);
  c.payload(1, 0) = oracle::q(-3);
  CHECK(serialize_certificate(c) ==
        "kind bilinear_form\nsigma 1\nfield Q\nscope graded\ndim 2\nrow 0 1/2\nrow -3 0\n");
}

TEST_CASE("malformed certificates") {
  CHECK_THROWS_AS(parse_certificate(""), CertificateParseError);
  CHECK_THROWS_AS(parse_certificate("kind nonsense\n"), CertificateParseError);
  CHECK_THROWS_AS(parse_certificate("kind bilinear_form\nsigma 0\nfield Q\nscope graded\ndim 2\nrow 1 0\n"),
                  CertificateParseError);
  CHECK_THROWS_AS(parse_certificate("kind bilinear_form\nsigma 0\nfield Q\nscope graded\ndim 1\nrow 1 2\n"),
                  CertificateParseError);
  CHECK_THROWS_AS(parse_certificate("kind bilinear_form\nsigma x\nfield Q\nscope graded\ndim 1\nrow 1\n"),
                  CertificateParseError);
  try {
    parse_certificate("kind bilinear_form\nsigma 0\nfield Q\nscope graded\ndim 1\nrow 1/0\n");
    FAIL("expected a parse error");
  } catch (const CertificateParseError& e) {
    CHECK(std::string(e.what()).find("line 6") != std::string::npos);
  }
}

TEST_CASE("zero form rejects") {
  const GradedAlgebra nn = nakayama_nesbitt(oracle::q(1), oracle::q(2));
  Certificate c{CertificateKind::bilinear_form, 3, Q, Scope::graded, Matrix(Q, 4, 4)};
  const auto r = verify_certificate(nn, c);
  CHECK(!r.accepted);
  CHECK(r.reason.find("degenerate") != std::string::npos);
}

TEST_CASE("tampered form names a failing triple") {
  const GradedAlgebra nn = nakayama_nesbitt(oracle::q(1), oracle::q(2));
  Certificate c = form_for(nn, 3);
  c.payload(0, 3) += Scalar::one(Q);
  const auto r = verify_certificate(nn, c);
  CHECK(!r.accepted);
  REQUIRE(r.reason.rfind("associativity violated at triple (", 0) == 0);
  CHECK(!oracle::form_is_valid(nn, c.payload, 3));
}

TEST_CASE("wrong sigma, field or shape rejects") {
  const GradedAlgebra nn = nakayama_nesbitt(oracle::q(1), oracle::q(2));
  Certificate c = form_for(nn, 3);
  Certificate s = c;
  s.sigma = 1;
  CHECK(!verify_certificate(nn, s).accepted);
  s.sigma = 9;
  CHECK(!verify_certificate(nn, s).accepted);
  Certificate f = c;
  f.field = Field::prime(7);
  CHECK(!verify_certificate(nn, f).accepted);
  Certificate shape = c;
  shape.payload = Matrix(Q, 3, 3);
  CHECK(verify_certificate(nn, shape).reason.find("malformed") != std::string::npos);
}

TEST_CASE("trace functionals") {
  const GradedAlgebra m2 = matrix_good_grading(Q, FiniteGroup::cyclic(2), {0, 1});
  Certificate tr{CertificateKind::trace_functional, 0, Q, Scope::graded, oracle::from_ints(Q, {{1, 0, 0, 1}})};
  CHECK(verify_certificate(m2, tr).accepted);
  // lambda(e_11) only: fails to vanish on the commutator e_12 e_21 - e_21 e_12.
  Certificate e11{CertificateKind::trace_functional, 0, Q, Scope::graded, oracle::from_ints(Q, {{1, 0, 0, 0}})};
  CHECK(verify_certificate(m2, e11).reason.find("commutator") != std::string::npos);
  // Nonzero on e_12, which has degree 1.
  Certificate off{CertificateKind::trace_functional, 0, Q, Scope::graded, oracle::from_ints(Q, {{1, 1, 0, 1}})};
  CHECK(!verify_certificate(m2, off).accepted);
  Certificate zero{CertificateKind::trace_functional, 0, Q, Scope::graded, Matrix(Q, 1, 4)};
  CHECK(!verify_certificate(m2, zero).accepted);
}

TEST_CASE("iso matrices") {
  const GradedAlgebra nn = nakayama_nesbitt(oracle::q(1), oracle::q(2));
  Rng rng(4);
  const Verdict v = is_sigma_graded_frobenius(nn, 3, Method::iso, {}, rng);
  REQUIRE(v.certificate);
  CHECK(verify_certificate(nn, *v.certificate).accepted);
  Certificate iso = *v.certificate;
  iso.kind = CertificateKind::iso_matrix;
  CHECK(verify_certificate(nn, iso).accepted);
  iso.payload = Matrix::identity(Q, 4);
  CHECK(!verify_certificate(nn, iso).accepted);
}

TEST_CASE("every entry tamper of a certificate is judged like the oracle") {
  const GradedAlgebra nn = nakayama_nesbitt(oracle::q(1), oracle::q(2));
  const Certificate c = form_for(nn, 3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Certificate t = c;
      t.payload(i, j) += Scalar::one(Q);
      CHECK(verify_certificate(nn, t).accepted == oracle::form_is_valid(nn, t.payload, 3));
    }
}

}
