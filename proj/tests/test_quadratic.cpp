#include <doctest.h>

#include "monodromy/level.hpp"
#include "monodromy/quadratic.hpp"

using namespace monodromy;

TEST_CASE("the quadratic generator squares to the radicand") {
  auto ctx = LevelContext::get(3);
  const Ext& t = ctx->t;
  CHECK(!t.is_cyclotomic());
  CHECK(t * t == ctx->embed(ctx->radicand));
  CHECK((t * t).is_cyclotomic());
}

TEST_CASE("norm and inverse in the quadratic algebra") {
  auto ctx = LevelContext::get(3);
  Ext x = ctx->ext_one() + ctx->t;
  Ext y = ctx->embed(ctx->q) - ctx->t.scaled(Rat(2, 3));
  for (const Ext& e : {x, y, x * y, ctx->t}) {
    CHECK((e * e.inverse()).is_one());
    // norm(e) = e * flip(e) lands in the cyclotomic part.
    Ext prod = e * e.t_flip();
    CHECK(prod.is_cyclotomic());
    CHECK(prod.u() == e.norm());
  }
  CHECK(x * y == y * x);
  CHECK((x + y) - y == x);
  CHECK(-(-x) == x);
}

TEST_CASE("t_flip is a ring automorphism") {
  auto ctx = LevelContext::get(5);
  Ext x = ctx->embed(Cyc::root(ctx->conductor, 3)) + ctx->t;
  Ext y = ctx->ext_one() - ctx->t.scaled(Rat(1, 2));
  CHECK((x * y).t_flip() == x.t_flip() * y.t_flip());
  CHECK((x + y).t_flip() == x.t_flip() + y.t_flip());
  CHECK(x.t_flip().t_flip() == x);
}

TEST_CASE("powers") {
  auto ctx = LevelContext::get(4);
  Ext x = ctx->ext_one() + ctx->t;
  CHECK(x.pow(0).is_one());
  CHECK(x.pow(3) == x * x * x);
  CHECK(x.pow(-2) == (x * x).inverse());
}

TEST_CASE("level 2: the algebra splits and zero divisors appear") {
  auto ctx = LevelContext::get(2);
  // q = i at level 2, so the radicand is q(1+q+q^2) = -1.
  CHECK(ctx->radicand == Cyc::from_rat(ctx->conductor, Rat(-1)));
  Cyc i = Cyc::root(ctx->conductor, ctx->conductor / 4);
  // 1 + i t has norm 1 - (-1) i^2 = 0: nonzero but not invertible.
  Ext zd = ctx->ext_one() + ctx->t.scaled_cyc(i);
  CHECK(!zd.is_zero());
  CHECK(zd.norm().is_zero());
  CHECK_THROWS_AS(zd.inverse(), Error&);
  // Its flip-partner multiplies it to zero.
  CHECK((zd * zd.t_flip()).is_zero());
}

TEST_CASE("level 1: t is exactly zero") {
  auto ctx = LevelContext::get(1);
  CHECK(ctx->radicand.is_zero());
  CHECK(ctx->t.is_zero());
  CHECK(ctx->t.is_cyclotomic());
  CHECK((ctx->t * ctx->t).is_zero());
}

TEST_CASE("incompatible algebras are rejected") {
  auto a = LevelContext::get(3);
  auto b = LevelContext::get(4);
  CHECK_THROWS_AS(a->t + b->t, Error&);
}
