#include <doctest.h>

#include <set>

#include "gradfrob/algebra_ops.hpp"
#include "gradfrob/constructions.hpp"
#include "gradfrob/frobenius.hpp"
#include "gradfrob/text_format.hpp"
#include "helpers.hpp"

using namespace gradfrob;

namespace {

const Field Q = Field::rationals();

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("trivial extensions") {
  const GradedAlgebra k = truncated_polynomial(Q, 1);
  const GradedAlgebra te = trivial_extension(k);
  CHECK(te.dim() == 2);
  CHECK(te.component_dims() == std::vector<std::size_t>{1, 1});
  // The dual generator squares to zero.
  CHECK(is_zero_vector(te.multiply(basis_vector(te, 1), basis_vector(te, 1))));
  CHECK(validate_algebra(te).empty());

  const GradedAlgebra r = truncated_polynomial(Q, 3);
  const GradedAlgebra t3 = trivial_extension(r);
  CHECK(t3.dim() == 6);
  // (x, 0)(0, delta_x^2) = (0, x . delta_x^2) and (x . f)(y) = f(yx), so
  // x . delta_x^2 = delta_x.
  const Vector prod = t3.multiply(basis_vector(t3, 1), basis_vector(t3, 5));
  CHECK(prod == basis_vector(t3, 4));
  CHECK(validate_algebra(trivial_extension(r, FiniteGroup::cyclic(4), 2)).empty());
  CHECK_THROWS(trivial_extension(group_algebra(Q, FiniteGroup::cyclic(2))));
}

TEST_CASE("split trivial extension") {
  const GradedAlgebra k = truncated_polynomial(Q, 1);
  const GradedAlgebra a = trivial_extension_split(k, k);
  CHECK(a.dim() == 4);
  CHECK(a.component_dims() == std::vector<std::size_t>{2, 1, 1});
  CHECK(validate_algebra(a).empty());
  const GradedAlgebra b = trivial_extension_split(k, truncated_polynomial(Q, 2), symmetric_group_3(), 1, 2);
  CHECK(validate_algebra(b).empty());
  CHECK(b.dim() == 6);
}

TEST_CASE("Nakayama-Nesbitt relations") {
  const GradedAlgebra a = nakayama_nesbitt(oracle::q(1), oracle::q(2));
  CHECK(a.dim() == 4);
  CHECK(a.degrees() == std::vector<GroupElement>{0, 1, 2, 3});
  const auto b = [&](std::size_t i) { return basis_vector(a, i); };
  CHECK(a.multiply(b(1), b(2)) == b(3));
  Vector two_z = zero_vector(Q, 4);
  two_z[3] = oracle::q(2);
  CHECK(a.multiply(b(2), b(1)) == two_z);
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}, {1, 3}, {3, 1}, {2, 3}, {3, 2}})
    CHECK(is_zero_vector(a.multiply(b(i), b(j))));
  const GradedAlgebra v = nakayama_nesbitt(oracle::q(1), oracle::q(2), FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)), 1, 2);
  CHECK(v.degrees() == std::vector<GroupElement>{0, 1, 2, 3});
  CHECK(validate_algebra(v).empty());
}

TEST_CASE("good and fine gradings") {
  const GradedAlgebra g3 = matrix_good_grading(Q, FiniteGroup::cyclic(3), {0, 1, 2});
  CHECK(g3.component_dims() == std::vector<std::size_t>{3, 3, 3});
  CHECK(matrix_good_grading(Q, FiniteGroup::cyclic(3), {1, 1, 1}).component_dims() == std::vector<std::size_t>{9, 0, 0});
  const GradedAlgebra s3 = matrix_good_grading(Q, symmetric_group_3(), {0, 1, 3});
  CHECK(validate_algebra(s3).empty());

  const GradedAlgebra f5 = matrix_fine_grading(Field::prime(5), 2);
  CHECK(f5.component_dims() == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(validate_algebra(f5).empty());
  CHECK(validate_algebra(matrix_fine_grading(Field::prime(7), 3)).empty());
  CHECK(matrix_fine_grading(Field::prime(7), 3).component_dims() == std::vector<std::size_t>(9, 1));
  CHECK_THROWS_AS(matrix_fine_grading(Q, 3), std::invalid_argument);
  CHECK_THROWS_AS(matrix_fine_grading(Field::prime(5), 3), std::invalid_argument);
  CHECK(primitive_root_of_unity(Field::prime(5), 2)->residue() == 4);
  CHECK(*primitive_root_of_unity(Q, 2) == oracle::q(-1));
  CHECK(!primitive_root_of_unity(Q, 4));
  const Scalar w = *primitive_root_of_unity(Field::prime(13), 4);
  CHECK(!(w * w).is_one());
  CHECK((w * w * w * w).is_one());
}

TEST_CASE("skew group algebras") {
  const GradedAlgebra k = truncated_polynomial(Q, 1);
  const GradedAlgebra kz2 = skew_group_algebra(k, FiniteGroup::cyclic(2), {Matrix::identity(Q, 1), Matrix::identity(Q, 1)});
  CHECK(kz2 == group_algebra(Q, FiniteGroup::cyclic(2)));
  const GradedAlgebra r = truncated_polynomial(Q, 2);
  // x -> 2x is an automorphism but not an involution, so it is not a Z2 action.
  Matrix doubling = Matrix::identity(Q, 2);
  doubling(1, 1) = oracle::q(2);
  CHECK_THROWS_AS(skew_group_algebra(r, FiniteGroup::cyclic(2), {Matrix::identity(Q, 2), doubling}),
                  std::invalid_argument);
  // A non-multiplicative map.
  Matrix bad = Matrix::identity(Q, 2);
  bad(0, 1) = oracle::q(1);
  CHECK_THROWS_AS(skew_group_algebra(r, FiniteGroup::cyclic(2), {Matrix::identity(Q, 2), bad}), std::invalid_argument);
  CHECK(validate_algebra(sign_skew_algebra(Q)).empty());
  CHECK(validate_algebra(swap_skew_algebra(Field::prime(3))).empty());
  CHECK(center(swap_skew_algebra(Q)).size() == 1);
}

TEST_CASE("matrix over an algebra") {
  const GradedAlgebra k = truncated_polynomial(Q, 1);
  CHECK(matrix_over(k, 2) == matrix_good_grading(Q, FiniteGroup(), {0, 0}));
  const GradedAlgebra nn = nakayama_nesbitt(oracle::q(1), oracle::q(2));
  const GradedAlgebra m = matrix_over(nn, 2);
  CHECK(m.dim() == 16);
  CHECK(m.component_dims() == std::vector<std::size_t>{4, 4, 4, 4});
  CHECK(validate_algebra(m).empty());
}

TEST_CASE("misc builders") {
  CHECK(upper_triangular(Q).dim() == 3);
  CHECK(square_zero_plane(Q).dim() == 3);
  CHECK(quaternion_dual_numbers(Q).dim() == 8);
  for (const auto& a : {upper_triangular(Q), square_zero_plane(Q), quaternion_dual_numbers(Q), swap_skew_algebra(Q)})
    CHECK(validate_algebra(a).empty());
  const Matrix e11 = oracle::from_ints(Q, {{1, 0}, {0, 0}});
  const Matrix e12 = oracle::from_ints(Q, {{0, 1}, {0, 0}});
  const Matrix e22 = oracle::from_ints(Q, {{0, 0}, {0, 1}});
  CHECK(algebra_from_matrices(Q, FiniteGroup(), {e11, e12, e22}, {0, 0, 0}).dim() == 3);
  CHECK_THROWS(algebra_from_matrices(Q, FiniteGroup(), {e11, e12}, {0, 0}));
  // x^2 - 2 over Q: (x)(x) = 2.
  const GradedAlgebra sqrt2 = polynomial_quotient(Q, {oracle::q(-2), oracle::q(0)});
  CHECK(sqrt2.multiply(basis_vector(sqrt2, 1), basis_vector(sqrt2, 1)) == Vector{oracle::q(2), oracle::q(0)});
}

TEST_CASE("random algebras are valid and reproducible") {
  std::set<std::size_t> dims, orders;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Field f = seed % 2 ? Field::prime(7) : Q;
    const GradedAlgebra a = random_graded_algebra(seed, f);
    CAPTURE(seed);
    CHECK(validate_algebra(a).empty());
    CHECK(a.dim() >= 1);
    CHECK(a.dim() <= 8);
    CHECK(a.group().order() <= 6);
    CHECK(a.field() == f);
    CHECK(random_graded_algebra(seed, f) == a);
    dims.insert(a.dim());
    orders.insert(a.group().order());
  }
  CHECK(dims.size() >= 5);
  CHECK(orders.size() >= 4);
}

TEST_CASE("random corpus hits both verdicts") {
  std::size_t yes = 0, no = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GradedAlgebra a = random_graded_algebra(seed, Field::prime(7));
    Rng rng(seed);
    const Verdict v = is_sigma_graded_frobenius(a, a.group().neutral(), Method::form, {}, rng);
    (v.outcome == Outcome::yes ? yes : no) += 1;
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("named constructions") {
  for (const auto& name : construction_names()) {
    CAPTURE(name);
    ConstructionSpec spec{name, {}};
    if (name == "matrix_over") spec.params["base"] = "nakayama_nesbitt";
    if (name == "random") spec.params["seed"] = "3";
    const GradedAlgebra a = build_construction(spec);
    CHECK(validate_algebra(a).empty());
    CHECK(parse_algebra_file(render_algebra(a)) == a);
  }
  const GradedAlgebra nn = build_construction({"nakayama_nesbitt", {{"u", "1"}, {"v", "2"}}});
  CHECK(nn == nakayama_nesbitt(oracle::q(1), oracle::q(2)));
  CHECK_THROWS_AS(build_construction({"no_such_thing", {}}), std::invalid_argument);
  CHECK_THROWS_AS(build_construction({"nakayama_nesbitt", {{"w", "1"}}}), std::invalid_argument);
}

}
