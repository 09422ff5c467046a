#include <catch2/catch_amalgamated.hpp>

#include "fibercone/prime_field.hpp"
#include "fibercone/rational.hpp"
#include "fibercone/rng.hpp"

using namespace fibercone;

TEST_CASE("rational canonical form") {
  Rational half(BigInt(2), BigInt(4));
  CHECK(half == Rational(BigInt(1), BigInt(2)));
  CHECK(half.num() == 1);
  CHECK(half.den() == 2);
  CHECK(half.to_string() == "1/2");

  Rational neg(BigInt(3), BigInt(-6));
  CHECK(neg.to_string() == "-1/2");
  CHECK(neg.den() == 2);
}

TEST_CASE("rational inverse round trip") {
  Rational third(BigInt(1), BigInt(3));
  CHECK((third * Rational(3)).is_one());
  CHECK(third.inv() == Rational(3));
}

TEST_CASE("rational division by zero rejected") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZeroError);
  CHECK_THROWS_AS(Rational(0).inv(), DivisionByZeroError);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DivisionByZeroError);
}

TEST_CASE("prime field wraparound") {
  PrimeField::Spec s{32003};
  PrimeField a(32002, s.p), b(1, s.p);
  CHECK((a + b).is_zero());
  CHECK((PrimeField(0, s.p) - b).value() == 32002);
}

TEST_CASE("prime field inverse") {
  PrimeField::Spec s{32003};
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    PrimeField a = PrimeField::sample(rng, s);
    if (a.is_zero()) continue;
    CHECK((a * a.inv()).is_one());
    CHECK((a / a).is_one());
  }
  CHECK_THROWS_AS(PrimeField(0, s.p).inv(), DivisionByZeroError);
}

TEST_CASE("prime field modulus validation") {
  CHECK_THROWS_AS(PrimeField::validate(PrimeField::Spec{32004}),
                  HypothesisError);
  CHECK_NOTHROW(PrimeField::validate(PrimeField::Spec{32003}));
  CHECK_NOTHROW(PrimeField::validate(PrimeField::Spec{2}));
}

TEMPLATE_TEST_CASE("field axioms on random scalars", "", Rational,
                   PrimeField) {
  using F = TestType;
  typename F::Spec spec{};
  Rng rng(20240801);
  for (int i = 0; i < 300; ++i) {
    F a = F::sample(rng, spec);
    F b = F::sample(rng, spec);
    F c = F::sample(rng, spec);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + F::zero(spec) == a);
    CHECK(a * F::one(spec) == a);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}
