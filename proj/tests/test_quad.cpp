#include <catch_amalgamated.hpp>

#include "biperiodic/quad.hpp"
#include "oracle.hpp"

using namespace biperiodic;

namespace {

QuadElement q(Rational x, Rational y, Rational d) { return {std::move(x), std::move(y), std::move(d)}; }

// x*y by expanding (x1 + y1 r)(x2 + y2 r) with r^2 = D, written out by hand.
QuadElement expand_product(const QuadElement& u, const QuadElement& v) {
  const Rational d = u.disc();
  return q(u.rat() * v.rat() + d * u.irr() * v.irr(), u.rat() * v.irr() + u.irr() * v.rat(), d);
}

}  // namespace

TEST_CASE("quad_mul examples") {
  const Rational d(7);
  const QuadElement root = QuadElement::root(d);
  const QuadElement sq = root * root;
  CHECK(sq.rat() == d);
  CHECK(sq.irr().is_zero());

  const QuadElement x = q(Rational(3, 5), Rational(-2), d);
  CHECK(one_like(x) * x == x);

  // golden ratio: phi^2 = phi + 1
  const QuadElement phi = q(Rational(1, 2), Rational(1, 2), Rational(5));
  const QuadElement phi2 = phi * phi;
  CHECK(phi2.rat() == Rational(3, 2));
  CHECK(phi2.irr() == Rational(1, 2));
  CHECK(phi2 == phi + Rational(1));
}

TEST_CASE("quad_pow examples") {
  const QuadElement phi = q(Rational(1, 2), Rational(1, 2), Rational(5));
  CHECK(pow(phi, 0) == one_like(phi));
  CHECK(pow(phi, 1) == phi);
  const QuadElement cube = pow(phi, 3);
  CHECK(cube.rat() == Rational(2));
  CHECK(cube.irr() == Rational(1));
  CHECK(cube == expand_product(expand_product(phi, phi), phi));
}

TEST_CASE("mismatched discriminants are rejected") {
  const QuadElement x = QuadElement::root(Rational(2));
  const QuadElement y = QuadElement::root(Rational(3));
  CHECK_THROWS_AS(x * y, MismatchedDiscriminant);
  CHECK_THROWS_AS(x + y, MismatchedDiscriminant);
  CHECK_FALSE(x == y);
}

TEST_CASE("inverse and norm") {
  const QuadElement x = q(Rational(2), Rational(1, 3), Rational(5));
  CHECK(x * x.inverse() == one_like(x));
  CHECK(x.norm() == Rational(4) - Rational(5, 9));
  // 1 + sqrt(1) has norm 0 once D is a square
  CHECK_THROWS_AS(q(Rational(1), Rational(1), Rational(1)).inverse(), DivisionByZero);
}

TEST_CASE("normalization folds square discriminants") {
  const QuadElement x = q(Rational(1), Rational(2), Rational(9, 4));
  const QuadElement n = x.normalized();
  CHECK(n.rat() == Rational(4));
  CHECK(n.irr().is_zero());
  CHECK(x == Rational(4));
  CHECK(x.is_rational());
  CHECK_FALSE(q(Rational(1), Rational(2), Rational(2)).is_rational());
  CHECK(q(Rational(1), Rational(0), Rational(2)) == Rational(1));
}

TEST_CASE("ring axioms and conjugation on random inputs") {
  oracle::RationalGen gen(99);
  for (int i = 0; i < 200; ++i) {
    Rational d = gen.nonzero();
    if (d.exact_sqrt()) d += Rational(1, 7);  // keep sqrt(D) irrational most of the time
    const QuadElement x = q(gen.any(), gen.any(), d);
    const QuadElement y = q(gen.any(), gen.any(), d);
    const QuadElement z = q(gen.any(), gen.any(), d);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == expand_product(x, y));
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK(x.norm() == (x * x.conj()).rat());
  }
}

TEST_CASE("pow(x, m+n) = pow(x, m) * pow(x, n)") {
  oracle::RationalGen gen(5);
  std::uniform_int_distribution<unsigned long> exp(0, 32);
  for (int i = 0; i < 60; ++i) {
    const QuadElement x = q(gen.any(), gen.any(), Rational(gen.nonzero()));
    const unsigned long m = exp(gen.engine()), n = exp(gen.engine());
    CHECK(pow(x, m + n) == pow(x, m) * pow(x, n));
  }
}
