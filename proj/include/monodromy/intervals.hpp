// Certified enclosures: intervals with exact rational endpoints.  Endpoint
// transcendentals (pi, cos, sin, sqrt) are computed with MPFR directed
// rounding, then pulled back to exact rationals, so every interval is a
// mathematically sound enclosure.  Refining the working precision along the
// doubling chain b, 2b, 4b, ... never enlarges an enclosure.
#ifndef MONODROMY_INTERVALS_HPP_
#define MONODROMY_INTERVALS_HPP_

#include <string>

#include "monodromy/rational.hpp"

namespace monodromy {

struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat l, Rat h);
  static RatInterval point(const Rat& r) { return RatInterval(r, r); }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& r) const { return cmp(lo, r) <= 0 && cmp(r, hi) <= 0; }
  bool contains(const RatInterval& o) const {
    return cmp(lo, o.lo) <= 0 && cmp(o.hi, hi) <= 0;
  }
  bool is_point() const { return lo == hi; }
  bool strictly_positive() const { return lo > 0; }
  bool strictly_negative() const { return hi < 0; }
  bool excludes_zero() const { return lo > 0 || hi < 0; }

  RatInterval operator+(const RatInterval& o) const;
  RatInterval operator-(const RatInterval& o) const;
  RatInterval operator*(const RatInterval& o) const;
  RatInterval operator-() const;
  RatInterval sq() const;  // tight enclosure of {x^2 : x in this}
  RatInterval scaled(const Rat& a) const;
  // Division by an interval that excludes zero.
  RatInterval operator/(const RatInterval& o) const;

  std::string str() const;
};

// Axis-aligned box in C.  An exact-zero component is represented by a point
// interval, which keeps certified-real quantities on the real axis.
struct ComplexBox {
  RatInterval re, im;

  ComplexBox() = default;
  ComplexBox(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexBox point(const Rat& r, const Rat& i) {
    return ComplexBox(RatInterval::point(r), RatInterval::point(i));
  }

  ComplexBox operator+(const ComplexBox& o) const { return {re + o.re, im + o.im}; }
  ComplexBox operator-(const ComplexBox& o) const { return {re - o.re, im - o.im}; }
  ComplexBox operator*(const ComplexBox& o) const;
  ComplexBox conj() const { return {re, -im}; }
  ComplexBox scaled(const Rat& a) const { return {re.scaled(a), im.scaled(a)}; }
  RatInterval norm_sq() const { return re.sq() + im.sq(); }
  bool contains(const ComplexBox& o) const {
    return re.contains(o.re) && im.contains(o.im);
  }
  Rat max_half_width() const {
    Rat a = re.width(), b = im.width();
    return (cmp(a, b) > 0 ? a : b) / 2;
  }
  std::string str() const;
};

// Enclosure of cos(2*pi*frac) / sin(2*pi*frac) at the given MPFR precision.
RatInterval cos_two_pi(const Rat& frac, unsigned long prec_bits);
RatInterval sin_two_pi(const Rat& frac, unsigned long prec_bits);

// Enclosure of sqrt over a nonnegative interval (x.lo >= 0 required).
RatInterval sqrt_enclosure(const RatInterval& x, unsigned long prec_bits);

}  // namespace monodromy

#endif  // MONODROMY_INTERVALS_HPP_
