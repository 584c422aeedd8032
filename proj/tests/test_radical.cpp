#include <doctest.h>

#include "gradfrob/algebra_ops.hpp"
#include "gradfrob/constructions.hpp"
#include "gradfrob/linalg.hpp"
#include "gradfrob/radical.hpp"
#include "helpers.hpp"

using namespace gradfrob;

namespace {

const Field Q = Field::rationals();

}  // namespace

TEST_SUITE("radical") {

TEST_CASE("semisimple algebras have zero radical") {
  CHECK(jacobson_radical(matrix_good_grading(Q, FiniteGroup(), {0, 0})).empty());
  CHECK(jacobson_radical(truncated_polynomial(Q, 1)).empty());
  CHECK(jacobson_radical(group_algebra(Q, symmetric_group_3())).empty());
}

TEST_CASE("dual numbers") {
  const auto j = jacobson_radical(truncated_polynomial(Q, 2));
  REQUIRE(j.size() == 1);
  CHECK(j[0][0].is_zero());
  CHECK(!j[0][1].is_zero());
}

TEST_CASE("radical dimensions") {
  CHECK(jacobson_radical(truncated_polynomial(Q, 4)).size() == 3);
  CHECK(jacobson_radical(upper_triangular(Q)).size() == 1);
  CHECK(jacobson_radical(square_zero_plane(Q)).size() == 2);
  CHECK(jacobson_radical(nakayama_nesbitt(oracle::q(1), oracle::q(2))).size() == 3);
  CHECK(jacobson_radical(quaternion_dual_numbers(Q)).size() == 4);
  CHECK(jacobson_radical(upper_triangular(Field::prime(7))).size() == 1);
  CHECK_THROWS_AS(jacobson_radical(truncated_polynomial(Field::prime(2), 2)), UnsupportedCharacteristic);
  CHECK_THROWS_AS(jacobson_radical(group_algebra(Field::prime(3), FiniteGroup::cyclic(3))), UnsupportedCharacteristic);
}

TEST_CASE("the radical is nilpotent") {
  const GradedAlgebra a = forget_grading(trivial_extension(truncated_polynomial(Q, 3)));
  const auto j = jacobson_radical(a);
  CHECK(j.size() == 5);
  // J^6 = 0 for any radical of a 6-dimensional algebra; check products of pairs
  // stay in J and that every element of J has a nilpotent multiplication map.
  Span span(Q, a.dim());
  for (const auto& v : j) span.add(v);
  for (const auto& x : j)
    for (const auto& y : j) CHECK(span.contains(a.multiply(x, y)));
  for (const auto& x : j) {
    Matrix l = a.left_multiplication(x), p = l;
    for (std::size_t k = 1; k < a.dim(); ++k) p = p * l;
    CHECK(p.is_zero());
  }
}

TEST_CASE("locality") {
  CHECK(is_local(truncated_polynomial(Q, 3)).outcome == LocalResult::Outcome::yes);
  const GradedAlgebra kk = direct_product(truncated_polynomial(Q, 1), truncated_polynomial(Q, 1));
  const auto r = is_local(kk);
  CHECK(r.outcome == LocalResult::Outcome::no);
  CHECK(r.quotient_dim == 2);
  const GradedAlgebra kk7 = direct_product(truncated_polynomial(Field::prime(7), 1), truncated_polynomial(Field::prime(7), 1));
  CHECK(is_local(kk7).outcome == LocalResult::Outcome::no);
  const auto qd = is_local(quaternion_dual_numbers(Q));
  CHECK(qd.outcome == LocalResult::Outcome::unsupported);
  CHECK(qd.quotient_dim == 4);
  CHECK(!qd.note.empty());
  // F7[x]/(x^2 + 1) is F49: a field, enumerated.
  const Field f7 = Field::prime(7);
  CHECK(is_local(polynomial_quotient(f7, {Scalar::one(f7), Scalar::zero(f7)})).outcome == LocalResult::Outcome::yes);
  // F5[x]/(x^2 + 1) splits since 2^2 = -1.
  const Field f5 = Field::prime(5);
  CHECK(is_local(polynomial_quotient(f5, {Scalar::one(f5), Scalar::zero(f5)})).outcome == LocalResult::Outcome::no);
  CHECK(is_local(matrix_good_grading(Q, FiniteGroup(), {0, 0})).outcome == LocalResult::Outcome::no);
  CHECK(is_local(nakayama_nesbitt(oracle::q(1), oracle::q(2))).outcome == LocalResult::Outcome::yes);
}

}
