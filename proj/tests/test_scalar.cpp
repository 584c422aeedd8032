#include <doctest.h>

#include <random>

#include "gradfrob/scalar.hpp"

using namespace gradfrob;

TEST_SUITE("scalar") {

TEST_CASE("parse reduces fractions and residues") {
  const Field q = Field::rationals();
  const Field f7 = Field::prime(7);
  CHECK(parse_scalar("3/6", q).to_string() == "1/2");
  CHECK(parse_scalar("-4/-8", q).to_string() == "1/2");
  CHECK(parse_scalar("2/-4", q).to_string() == "-1/2");
  CHECK(parse_scalar("9", f7).residue() == 2);
  CHECK(parse_scalar("-1", f7).residue() == 6);
  CHECK(parse_scalar("0", q).is_zero());
}

TEST_CASE("parse rejects bad literals") {
  const Field q = Field::rationals();
  CHECK_THROWS_AS(parse_scalar("1/0", q), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("abc", q), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("", q), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/2/3", q), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/2", Field::prime(7)), std::invalid_argument);
}

TEST_CASE("field literals") {
  CHECK(Field::parse("Q").is_rationals());
  CHECK(Field::parse("F7").characteristic() == 7);
  CHECK(Field::parse("F2147483647").characteristic() == 2147483647u);
  CHECK_THROWS(Field::parse("F8"));
  CHECK_THROWS(Field::parse("F1"));
  CHECK_THROWS(Field::parse("F2147483659"));
  CHECK_THROWS(Field::parse("R"));
  CHECK(Field::prime(5).to_string() == "F5");
}

TEST_CASE("render then parse is the identity") {
  std::mt19937_64 rng(11);
  for (const Field f : {Field::rationals(), Field::prime(7), Field::prime(2147483647)}) {
    for (int k = 0; k < 200; ++k) {
      Scalar x = sample_scalar(f, rng, 1000);
      if (f.is_rationals()) {
        Scalar d = sample_scalar(f, rng, 50);
        if (!d.is_zero()) x /= d;
      }
      CHECK(parse_scalar(x.to_string(), f) == x);
    }
  }
}

TEST_CASE("sampling ranges and determinism") {
  Rng a(5), b(5);
  for (int k = 0; k < 500; ++k) {
    const Scalar x = sample_scalar(Field::rationals(), a, 4);
    CHECK(x.rational() >= -4);
    CHECK(x.rational() <= 4);
    CHECK(x.rational().get_den() == 1);
    CHECK(sample_scalar(Field::rationals(), b, 4) == x);
  }
  Rng c(9);
  for (int k = 0; k < 500; ++k) CHECK(sample_scalar(Field::prime(7), c, 1).residue() < 7);
  CHECK(sample_set_size(Field::rationals(), 4) == 9);
  CHECK(sample_set_size(Field::prime(7), 4) == 7);
}

TEST_CASE("mixed fields throw") {
  const Scalar x = Scalar::one(Field::rationals());
  const Scalar y = Scalar::one(Field::prime(3));
  CHECK_THROWS_AS(x + y, FieldMismatch);
  CHECK_THROWS_AS(Scalar::zero(Field::prime(3)).inverse(), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
  for (const Field f : {Field::rationals(), Field::prime(7), Field::prime(65521), Field::prime(2147483647)}) {
    CAPTURE(f.to_string());
    Rng rng(1234);
    auto draw = [&] {
      Scalar x = sample_scalar(f, rng, 1u << 20);
      if (f.is_rationals()) {
        const Scalar d = sample_scalar(f, rng, 30);
        if (!d.is_zero()) x /= d;
      }
      return x;
    };
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    int failures = 0;
    for (int k = 0; k < 10000; ++k) {
      const Scalar a = draw(), b = draw(), c = draw();
      if (!((a + b) + c == a + (b + c))) ++failures;
      if (!((a * b) * c == a * (b * c))) ++failures;
      if (!(a * (b + c) == a * b + a * c)) ++failures;
      if (!(a + b == b + a) || !(a * b == b * a)) ++failures;
      if (!(a - a == zero) || !(a * one == a) || !(a + zero == a)) ++failures;
      if (!a.is_zero() && !(a * a.inverse() == one)) ++failures;
      if (!b.is_zero() && !((a / b) * b == a)) ++failures;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("prime field wraparound near 2^31") {
  const Field f = Field::prime(2147483647);
  const Scalar m = Scalar::from_int(f, -1);
  CHECK(m.residue() == 2147483646u);
  CHECK((m * m).is_one());
  CHECK((m + Scalar::one(f)).is_zero());
}

}
