#include <doctest.h>

#include "monodromy/cyclotomic.hpp"

using namespace monodromy;

TEST_CASE("fifth root of unity by repeated multiplication") {
  Cyc z = Cyc::root(5, 1);
  Cyc p = Cyc::one(5);
  for (int i = 0; i < 5; ++i) p = p * z;  // oracle independent of pow()
  CHECK(p.is_one());
  CHECK(z.pow(5).is_one());
  CHECK(!z.pow(3).is_one());

  Cyc sum = Cyc::zero(5);
  for (int k = 0; k < 5; ++k) sum += Cyc::root(5, k);
  CHECK(sum.is_zero());
}

TEST_CASE("exponent wraparound and negative exponents") {
  CHECK(Cyc::root(12, 13) == Cyc::root(12, 1));
  CHECK(Cyc::root(12, -1) == Cyc::root(12, 11));
  CHECK(Cyc::root(7, 0).is_one());
  CHECK(Cyc::root(2, 1) == Cyc::from_rat(2, Rat(-1)));
}

TEST_CASE("2 cos(pi/6) squares to 3") {
  Cyc y = Cyc::root(12, 1) + Cyc::root(12, -1);
  CHECK(y.is_real());
  CHECK(y * y == Cyc::from_rat(12, Rat(3)));
}

TEST_CASE("inverse and division") {
  for (const Cyc& x : {Cyc::one(7) + Cyc::root(7, 1),
                       Cyc::from_rat(9, Rat(2)) - Cyc::root(9, 3),
                       Cyc::root(8, 3),
                       Cyc::root(40, 11) + Cyc::root(40, 2).scaled(Rat(1, 3))}) {
    Cyc inv = x.inverse();
    CHECK((x * inv).is_one());
  }
  CHECK_THROWS_AS(Cyc::zero(5).inverse(), Error&);
  CHECK(Cyc::root(9, 2).pow(-3) == Cyc::root(9, 2).inverse().pow(3));
}

TEST_CASE("galois action permutes roots and respects products") {
  Cyc z = Cyc::root(15, 1);
  CHECK(z.galois(2) == Cyc::root(15, 2));
  CHECK(z.galois(4) == z.galois(2).galois(2));
  Cyc a = Cyc::one(15) + z;
  Cyc b = z.pow(3) - Cyc::from_rat(15, Rat(1, 2));
  CHECK((a * b).galois(7) == a.galois(7) * b.galois(7));
  CHECK((a + b).galois(7) == a.galois(7) + b.galois(7));
  CHECK(a.conj().conj() == a);
  CHECK_THROWS_AS(z.galois(5), Error&);  // gcd(5, 15) != 1
}

TEST_CASE("realness detection") {
  CHECK(Cyc::from_rat(20, Rat(7, 3)).is_real());
  CHECK((Cyc::root(20, 3) + Cyc::root(20, -3)).is_real());
  CHECK(!Cyc::root(20, 1).is_real());
  // i * (z - conj z) is real for any z.
  Cyc z = Cyc::root(20, 7).scaled(Rat(2, 5)) + Cyc::root(20, 2);
  Cyc i = Cyc::root(20, 5);
  CHECK((i * (z - z.conj())).is_real());
}

TEST_CASE("conductor lifting is an embedding") {
  Cyc z3 = Cyc::root(3, 1);
  CHECK(z3.lift(12) == Cyc::root(12, 4));
  Cyc x = Cyc::one(3) + z3.scaled(Rat(2));
  Cyc lifted = x.lift(24);
  CHECK(lifted.conductor() == 24);
  CHECK(lifted == Cyc::one(24) + Cyc::root(24, 8).scaled(Rat(2)));

  auto [a, b] = align_conductors(Cyc::root(3, 1), Cyc::root(4, 1));
  CHECK(a.conductor() == 12);
  CHECK(b.conductor() == 12);
  CHECK(a == Cyc::root(12, 4));
  CHECK(b == Cyc::root(12, 3));
  CHECK(a * b == Cyc::root(12, 7));
}

TEST_CASE("rational recognition") {
  CHECK(Cyc::root(5, 0).as_rational() == Rat(1));
  Cyc sum = Cyc::zero(5);
  for (int k = 1; k < 5; ++k) sum += Cyc::root(5, k);
  CHECK(sum.as_rational() == Rat(-1));  // the nontrivial roots sum to -1
  CHECK(!Cyc::root(5, 1).as_rational().has_value());
}

TEST_CASE("from_terms accumulates and reduces") {
  Cyc x = Cyc::from_terms(5, {{0, Rat(1)}, {5, Rat(2)}});  // 1 + 2*zeta^5 = 3
  CHECK(x.as_rational() == Rat(3));
  Cyc y = Cyc::from_terms(8, {{1, Rat(1)}, {3, Rat(1)}, {5, Rat(1)}, {7, Rat(1)}});
  CHECK(y.is_zero());  // the primitive 8th roots sum to 0
}

TEST_CASE("keys are canonical") {
  Cyc a = Cyc::root(12, 1) * Cyc::root(12, 11);
  CHECK(a.key() == Cyc::one(12).key());
  CHECK(Cyc::root(12, 1).key() != Cyc::root(12, 2).key());
  CHECK(Cyc::one(12).support_size() == 1);
}
