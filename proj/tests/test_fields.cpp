#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "castelnuovo/errors.hpp"
#include "castelnuovo/fields.hpp"

using namespace castelnuovo;

TEST_CASE("prime field construction") {
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(2147483647ULL));
  CHECK_THROWS_AS(PrimeField(1), InvalidArgument);
  CHECK_THROWS_AS(PrimeField(15), InvalidArgument);
  CHECK_THROWS_AS(PrimeField(4294967311ULL), InvalidArgument);
}

TEST_CASE("prime field arithmetic") {
  const PrimeField f(7);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_big(BigInt(-15)) == 6);
  CHECK(f.from_rational(Rational(1, 3)) == 5);
  CHECK_THROWS_AS(f.from_rational(Rational(1, 7)), InvalidArgument);
  for (std::uint64_t x = 1; x < 7; ++x) {
    CHECK(f.mul(x, f.inv(x)) == 1);
  }
  CHECK_THROWS_AS(f.inv(0), InvalidArgument);
  int squares = 0;
  for (std::uint64_t x = 1; x < 7; ++x) {
    squares += f.is_square(x) ? 1 : 0;
  }
  CHECK(squares == 3);

  // Arithmetic near the top of the supported range stays exact.
  const PrimeField big(2147483647ULL);
  const auto x = big.from_int(2147483646LL);
  CHECK(big.mul(x, x) == 1);
}

TEST_CASE("quadratic extension is a field of p^2 elements") {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
    const QuadraticExtensionField f(p);
    CHECK(f.size() == p * p);
    CHECK_FALSE(f.base().is_square(f.nonresidue()));
    for (std::uint64_t i = 1; i < f.size(); ++i) {
      const auto x = f.element(i);
      CHECK(f.equal(f.mul(x, f.inv(x)), f.one()));
    }
    // Every element of F_p is a square in F_{p^2}.
    for (std::uint64_t a = 0; a < p; ++a) {
      bool found = false;
      for (std::uint64_t i = 0; i < f.size() && !found; ++i) {
        found = f.equal(f.mul(f.element(i), f.element(i)), f.embed(a));
      }
      CHECK(found);
    }
  }
  CHECK_THROWS_AS(QuadraticExtensionField(2), InvalidArgument);
}

TEST_CASE("quadratic number field") {
  CHECK_THROWS_AS(QuadraticNumberField(Rational(4, 9)), InvalidArgument);
  CHECK_THROWS_AS(QuadraticNumberField(Rational(0)), InvalidArgument);
  const QuadraticNumberField f(Rational(5));
  const SurdElement golden(Rational(1, 2), Rational(1, 2));
  // phi^2 = phi + 1
  CHECK(f.equal(f.mul(golden, golden), f.add(golden, f.one())));
  CHECK(f.equal(f.mul(golden, f.inv(golden)), f.one()));
  CHECK(f.format(golden) == "1/2+1/2*sqrt(5)");
  CHECK(f.format(SurdElement(Rational(1, 2), Rational(-3, 2))) == "1/2-3/2*sqrt(5)");
  CHECK(f.format(SurdElement(0, -1)) == "-sqrt(5)");
  CHECK(f.format(SurdElement(2, 1)) == "2+sqrt(5)");
}

TEST_CASE("rational square roots") {
  Rational root;
  CHECK(rational_sqrt(Rational(49, 4), root));
  CHECK(root == Rational(7, 2));
  CHECK_FALSE(rational_sqrt(Rational(2), root));
  CHECK_FALSE(rational_sqrt(Rational(-4), root));
  CHECK(rational_sqrt(Rational(0), root));
}
