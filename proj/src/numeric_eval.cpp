#include "monodromy/numeric_eval.hpp"

namespace monodromy {

namespace {

constexpr unsigned long kRefineCapBits = 4096;
constexpr unsigned long kHardCapBits = 1ul << 20;

ComplexBox cyc_box(const Cyc& x, unsigned long bits) {
  unsigned long n = x.conductor();
  RatInterval re = RatInterval::point(Rat(0));
  RatInterval im = RatInterval::point(Rat(0));
  const auto& c = x.coeffs();
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    Rat frac(static_cast<long>(j), static_cast<long>(n));
    frac.canonicalize();
    re = re + cos_two_pi(frac, bits).scaled(c[j]);
    im = im + sin_two_pi(frac, bits).scaled(c[j]);
  }
  return ComplexBox(std::move(re), std::move(im));
}

// Principal square root enclosure of the value of a nonzero radicand a at
// working precision p.  Returns false when p is too coarse to pin down the
// intermediate enclosures.
bool sqrt_box_attempt(const Cyc& a, unsigned long p, ComplexBox& out) {
  if (a.is_real()) {
    Sign s = sign_decide(a, Rat(0));
    ComplexBox ab = cyc_box(a, p);
    if (s == Sign::kGreater) {
      RatInterval t = ab.re;
      if (t.lo < 0) t.lo = 0;  // certified positive; clip rounding slack
      out = ComplexBox(sqrt_enclosure(t, p), RatInterval::point(Rat(0)));
      return true;
    }
    // negative: principal sqrt is i * sqrt(-a)
    RatInterval t = -ab.re;
    if (t.lo < 0) t.lo = 0;
    out = ComplexBox(RatInterval::point(Rat(0)), sqrt_enclosure(t, p));
    return true;
  }
  // Non-real radicand: sqrt(x + i y) = u + i v with u = sqrt((r + x)/2) > 0,
  // v = y / (2u), r = |a|.  The sign of y fixes the branch.
  ComplexBox ab = cyc_box(a, p);
  if (!ab.im.excludes_zero()) return false;  // need certainty about sign(y)
  RatInterval norm = ab.norm_sq();
  if (norm.lo < 0) norm.lo = 0;
  RatInterval r = sqrt_enclosure(norm, p);
  RatInterval u2 = (r + ab.re).scaled(Rat(1, 2));
  if (u2.lo < 0) u2.lo = 0;
  RatInterval u = sqrt_enclosure(u2, p);
  if (!u.excludes_zero()) return false;  // true u > 0 since y != 0
  RatInterval v = ab.im / u.scaled(Rat(2));
  out = ComplexBox(std::move(u), std::move(v));
  return true;
}

// Enclosure of the principal sqrt of the radicand, retrying along the
// doubling chain so results at doubled request precision stay nested.
ComplexBox sqrt_box(const Cyc& a, unsigned long bits) {
  if (a.is_zero()) return ComplexBox::point(Rat(0), Rat(0));
  for (unsigned long p = bits; p <= kHardCapBits; p *= 2) {
    ComplexBox out;
    if (sqrt_box_attempt(a, p, out)) return out;
  }
  fail_consistency("square-root enclosure did not converge");
}

}  // namespace

ComplexBox numeric_interval(const Cyc& x, unsigned long bits) {
  return cyc_box(x, bits);
}

ComplexBox numeric_interval(const Ext& x, unsigned long bits) {
  ComplexBox box = cyc_box(x.u(), bits);
  if (!x.v().is_zero() && !x.radicand().is_zero())
    box = box + cyc_box(x.v(), bits) * sqrt_box(x.radicand(), bits);
  return box;
}

bool is_real_certified(const Cyc& x) { return x.is_real(); }

namespace {

// Finds a monomial c = zeta^j with c^2 = r, if one exists.
bool monomial_sqrt(const Cyc& r, Cyc& out) {
  unsigned long n = r.conductor();
  for (unsigned long j = 0; j < n; ++j) {
    if (Cyc::root(n, static_cast<long>(2 * j)) == r) {
      out = Cyc::root(n, static_cast<long>(j));
      return true;
    }
  }
  return false;
}

// Decides, rigorously, whether the principal sqrt t of radicand a equals the
// candidate square root s (s^2 must equal a, s a field element): refines
// enclosures until t is separated from s or from -s.
bool principal_sqrt_equals(const Cyc& a, const Cyc& s) {
  for (unsigned long p = 64; p <= kHardCapBits; p *= 2) {
    ComplexBox tb = sqrt_box(a, p);
    ComplexBox sb = cyc_box(s, p);
    ComplexBox msb = cyc_box(-s, p);
    bool meets_s = tb.re.lo <= sb.re.hi && sb.re.lo <= tb.re.hi &&
                   tb.im.lo <= sb.im.hi && sb.im.lo <= tb.im.hi;
    bool meets_ms = tb.re.lo <= msb.re.hi && msb.re.lo <= tb.re.hi &&
                    tb.im.lo <= msb.im.hi && msb.im.lo <= tb.im.hi;
    if (meets_s && !meets_ms) return true;
    if (!meets_s && meets_ms) return false;
    if (!meets_s && !meets_ms) fail_consistency("sqrt branch separated from both candidates");
  }
  fail_consistency("sqrt branch decision did not converge");
}

}  // namespace

bool is_real_certified(const Ext& x) {
  if (x.v().is_zero()) return x.u().is_real();
  if (x.radicand().is_zero()) {
    // t evaluates to 0; only the scalar part carries numeric content.
    return x.u().is_real();
  }
  const Cyc& a = x.radicand();
  // Complex conjugation sends t to a square root of conj(a); write it as
  // (+/-) c t with c^2 = conj(a)/a when such a monomial c exists.
  Cyc ratio = a.conj() * a.inverse();
  Cyc c = Cyc::zero(a.conductor());
  if (!monomial_sqrt(ratio, c))
    fail("cannot certify realness: no monomial square root of conj(a)/a");
  // conj(t) = s * c * t with s = +/-1; pin s down: c*t squares to conj(a),
  // and conj(t) is the principal sqrt of conj(a) conjugated... decide by
  // enclosure: conj(box(t)) must meet exactly one of (+/- c t)'s boxes.
  for (unsigned long p = 64; p <= kHardCapBits; p *= 2) {
    ComplexBox tb = sqrt_box(a, p);
    ComplexBox conj_tb = tb.conj();
    ComplexBox cb = cyc_box(c, p);
    ComplexBox plus = cb * tb;
    ComplexBox minus = cyc_box(-c, p) * tb;
    auto meets = [](const ComplexBox& x1, const ComplexBox& x2) {
      return x1.re.lo <= x2.re.hi && x2.re.lo <= x1.re.hi &&
             x1.im.lo <= x2.im.hi && x2.im.lo <= x1.im.hi;
    };
    bool mp = meets(conj_tb, plus), mm = meets(conj_tb, minus);
    if (mp && !mm) {
      return x == Ext(x.u().conj(), x.v().conj() * c, a);
    }
    if (!mp && mm) {
      return x == Ext(x.u().conj(), -(x.v().conj() * c), a);
    }
    if (!mp && !mm) fail_consistency("conjugation branch separated from both candidates");
  }
  fail_consistency("conjugation branch decision did not converge");
}

bool numeric_value_is_zero(const Ext& x) {
  if (x.is_cyclotomic()) return x.u().is_zero();
  if (x.radicand().is_zero()) return x.u().is_zero();  // t evaluates to 0
  if (!x.norm().is_zero()) return false;  // u^2 != a v^2 forces a nonzero value
  // Norm zero with v != 0: x = v * (t + u/v) and (u/v)^2 = a, so the value
  // vanishes exactly when t coincides with the principal branch -u/v.
  Cyc s = -(x.u() * x.v().inverse());
  return principal_sqrt_equals(x.radicand(), s);
}

Sign sign_decide(const Cyc& x, const Rat& threshold) {
  if (!x.is_real()) fail("sign_decide requires a certified-real value");
  // A field element embeds faithfully, so exact equality is a plain vector
  // test and any nonzero difference must separate at some finite precision.
  if (x == Cyc::from_rat(x.conductor(), threshold)) return Sign::kEqual;
  for (unsigned long p = 64; p <= kHardCapBits; p *= 2) {
    ComplexBox box = numeric_interval(x, p);
    if (box.re.hi < threshold) return Sign::kLess;
    if (box.re.lo > threshold) return Sign::kGreater;
  }
  fail_consistency("sign decision did not converge");
}

Sign sign_decide(const Ext& x, const Rat& threshold) {
  if (!is_real_certified(x)) fail("sign_decide requires a certified-real value");
  if (x.is_cyclotomic() || x.radicand().is_zero()) return sign_decide(x.u(), threshold);
  // Interval refinement first; past the cap, settle equality exactly (the
  // algebra is not a field in the split case, so a nonzero element may still
  // have numeric value zero and would refine forever without this test).
  bool exact_checked = false;
  for (unsigned long p = 64; p <= kHardCapBits; p *= 2) {
    ComplexBox box = numeric_interval(x, p);
    if (box.re.hi < threshold) return Sign::kLess;
    if (box.re.lo > threshold) return Sign::kGreater;
    if (p >= kRefineCapBits && !exact_checked) {
      exact_checked = true;
      Ext d = x - Ext(Cyc::from_rat(x.conductor(), threshold), x.radicand());
      if (numeric_value_is_zero(d)) return Sign::kEqual;
    }
  }
  fail_consistency("sign decision did not converge");
}

}  // namespace monodromy
