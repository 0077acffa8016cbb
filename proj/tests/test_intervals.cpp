#include <doctest.h>

#include "monodromy/intervals.hpp"

using namespace monodromy;

namespace {

RatInterval iv(long a, long b, long den = 1) {
  return RatInterval(rat_of(a, den), rat_of(b, den));
}

}  // namespace

TEST_CASE("interval arithmetic endpoints") {
  CHECK((iv(1, 2) + iv(3, 5)).lo == Rat(4));
  CHECK((iv(1, 2) + iv(3, 5)).hi == Rat(7));
  CHECK((iv(-1, 2) * iv(3, 4)).lo == Rat(-4));
  CHECK((iv(-1, 2) * iv(3, 4)).hi == Rat(8));
  CHECK((-iv(1, 2)).lo == Rat(-2));

  CHECK(iv(-2, 3).sq().lo == Rat(0));
  CHECK(iv(-2, 3).sq().hi == Rat(9));
  CHECK(iv(1, 2).sq().lo == Rat(1));
  CHECK(iv(-3, -1).sq().lo == Rat(1));
  CHECK(iv(-3, -1).sq().hi == Rat(9));

  RatInterval q = iv(1, 1) / iv(2, 4);
  CHECK(q.lo == Rat(1, 4));
  CHECK(q.hi == Rat(1, 2));
  CHECK_THROWS_AS(iv(1, 1) / iv(-1, 1), Error&);

  CHECK(iv(0, 1).contains(Rat(1, 2)));
  CHECK(iv(0, 1).contains(iv(1, 3, 3)));
  CHECK(!iv(0, 1).contains(Rat(2)));
  CHECK(iv(1, 1).is_point());
  CHECK(iv(1, 2).excludes_zero());
  CHECK(iv(-2, -1).excludes_zero());
  CHECK(!iv(-1, 1).excludes_zero());
}

TEST_CASE("trig enclosures at exact anchor points") {
  // cos(0) = 1, cos(pi) = -1, cos(pi/2) = 0, sin(pi/2) = 1, cos(pi/3) = 1/2.
  CHECK(cos_two_pi(Rat(0), 128).contains(Rat(1)));
  CHECK(cos_two_pi(Rat(1, 2), 128).contains(Rat(-1)));
  CHECK(cos_two_pi(Rat(1, 4), 128).contains(Rat(0)));
  CHECK(sin_two_pi(Rat(1, 4), 128).contains(Rat(1)));
  CHECK(cos_two_pi(Rat(1, 6), 128).contains(Rat(1, 2)));
  CHECK(sin_two_pi(Rat(1, 12), 128).contains(Rat(1, 2)));  // sin(pi/6)
  // Enclosures never leave [-1, 1] even at critical points.
  for (int num = 0; num <= 8; ++num) {
    RatInterval c = cos_two_pi(rat_of(num, 8), 64);
    CHECK(c.lo >= Rat(-1));
    CHECK(c.hi <= Rat(1));
    RatInterval s = sin_two_pi(rat_of(num, 8), 64);
    CHECK(s.lo >= Rat(-1));
    CHECK(s.hi <= Rat(1));
  }
  // Argument reduction: frac and frac + 17 describe the same angle.
  RatInterval a = cos_two_pi(Rat(1, 7), 96);
  RatInterval b = cos_two_pi(Rat(1, 7) + Rat(17), 96);
  CHECK(a.contains(b));
  CHECK(b.contains(a));
  // Precision actually helps away from critical points.
  CHECK(cos_two_pi(Rat(1, 7), 256).width() < rat_of(1, 1l << 62) / Rat(4));
}

TEST_CASE("enclosures nest along the precision-doubling chain") {
  for (unsigned long bits = 32; bits <= 512; bits *= 2) {
    CHECK(cos_two_pi(Rat(1, 7), bits).contains(cos_two_pi(Rat(1, 7), bits * 2)));
    CHECK(sin_two_pi(Rat(3, 11), bits).contains(sin_two_pi(Rat(3, 11), bits * 2)));
    CHECK(sqrt_enclosure(iv(2, 2), bits).contains(sqrt_enclosure(iv(2, 2), bits * 2)));
  }
}

TEST_CASE("sqrt enclosure") {
  RatInterval r = sqrt_enclosure(iv(2, 2), 128);
  CHECK(r.sq().contains(Rat(2)));
  CHECK(r.lo > Rat(1));
  CHECK(r.hi < Rat(2));
  CHECK(sqrt_enclosure(iv(0, 0), 64).contains(Rat(0)));
  CHECK(sqrt_enclosure(iv(4, 4), 64).contains(Rat(2)));
  RatInterval wide = sqrt_enclosure(iv(1, 9), 64);
  CHECK(wide.contains(Rat(1)));
  CHECK(wide.contains(Rat(3)));
  CHECK(wide.lo >= Rat(0));
}

TEST_CASE("complex box arithmetic") {
  ComplexBox one_plus_i = ComplexBox::point(Rat(1), Rat(1));
  ComplexBox sq = one_plus_i * one_plus_i;  // (1+i)^2 = 2i
  CHECK(sq.re.contains(Rat(0)));
  CHECK(sq.im.contains(Rat(2)));
  CHECK(sq.norm_sq().contains(Rat(4)));

  ComplexBox z(iv(1, 2), iv(-1, 0));
  ComplexBox w = z * z.conj();
  CHECK(w.im.contains(Rat(0)));
  CHECK(w.re.contains(Rat(2)));  // |1 + (-i)|^2 possible value
  CHECK(z.scaled(Rat(-2)).re.lo == Rat(-4));
  CHECK(z.contains(ComplexBox::point(Rat(3, 2), Rat(-1, 2))));
}
