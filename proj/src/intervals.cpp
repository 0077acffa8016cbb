#include "monodromy/intervals.hpp"

#include <mpfr.h>

#include <algorithm>
#include <sstream>

namespace monodromy {

RatInterval::RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (cmp(lo, hi) > 0) fail("interval endpoints out of order");
}

RatInterval RatInterval::operator+(const RatInterval& o) const {
  return RatInterval(lo + o.lo, hi + o.hi);
}

RatInterval RatInterval::operator-(const RatInterval& o) const {
  return RatInterval(lo - o.hi, hi - o.lo);
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
  Rat p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
  Rat mn = p1, mx = p1;
  for (const Rat* p : {&p2, &p3, &p4}) {
    if (cmp(*p, mn) < 0) mn = *p;
    if (cmp(*p, mx) > 0) mx = *p;
  }
  return RatInterval(mn, mx);
}

RatInterval RatInterval::operator-() const { return RatInterval(-hi, -lo); }

RatInterval RatInterval::sq() const {
  if (lo >= 0) return RatInterval(lo * lo, hi * hi);
  if (hi <= 0) return RatInterval(hi * hi, lo * lo);
  Rat a = lo * lo, b = hi * hi;
  return RatInterval(Rat(0), cmp(a, b) > 0 ? a : b);
}

RatInterval RatInterval::scaled(const Rat& a) const {
  if (a >= 0) return RatInterval(lo * a, hi * a);
  return RatInterval(hi * a, lo * a);
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
  if (!o.excludes_zero()) fail("interval division by an interval containing zero");
  Rat q1 = lo / o.lo, q2 = lo / o.hi, q3 = hi / o.lo, q4 = hi / o.hi;
  Rat mn = q1, mx = q1;
  for (const Rat* q : {&q2, &q3, &q4}) {
    if (cmp(*q, mn) < 0) mn = *q;
    if (cmp(*q, mx) > 0) mx = *q;
  }
  return RatInterval(mn, mx);
}

std::string RatInterval::str() const {
  if (is_point()) return rat_str(lo);
  return "[" + rat_str(lo) + ", " + rat_str(hi) + "]";
}

ComplexBox ComplexBox::operator*(const ComplexBox& o) const {
  return {re * o.re - im * o.im, re * o.im + im * o.re};
}

std::string ComplexBox::str() const {
  return "(" + re.str() + ") + (" + im.str() + ")*i";
}

namespace {

Rat mpfr_to_rat(const mpfr_t x) {
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, x);
  Rat r(q);
  mpq_clear(q);
  return r;
}

// theta enclosure for 2*pi*f with f in [0, 1): directed rounding on pi and
// the product, so [lo, hi] certainly contains the true angle.
void two_pi_frac(mpfr_t lo, mpfr_t hi, const Rat& f) {
  mpfr_const_pi(lo, MPFR_RNDD);
  mpfr_mul_ui(lo, lo, 2, MPFR_RNDD);
  mpfr_mul_q(lo, lo, f.get_mpq_t(), MPFR_RNDD);
  mpfr_const_pi(hi, MPFR_RNDU);
  mpfr_mul_ui(hi, hi, 2, MPFR_RNDU);
  mpfr_mul_q(hi, hi, f.get_mpq_t(), MPFR_RNDU);
}

// Could k*pi lie inside [tlo, thi]?  Conservative: true unless certainly not.
bool may_contain_k_pi(const mpfr_t tlo, const mpfr_t thi, unsigned k, mpfr_prec_t prec) {
  mpfr_t kpi_lo, kpi_hi;
  mpfr_init2(kpi_lo, prec);
  mpfr_init2(kpi_hi, prec);
  if (k == 0) {
    mpfr_set_ui(kpi_lo, 0, MPFR_RNDD);
    mpfr_set_ui(kpi_hi, 0, MPFR_RNDU);
  } else {
    mpfr_const_pi(kpi_lo, MPFR_RNDD);
    mpfr_mul_ui(kpi_lo, kpi_lo, k, MPFR_RNDD);
    mpfr_const_pi(kpi_hi, MPFR_RNDU);
    mpfr_mul_ui(kpi_hi, kpi_hi, k, MPFR_RNDU);
  }
  bool possible = mpfr_cmp(tlo, kpi_hi) <= 0 && mpfr_cmp(kpi_lo, thi) <= 0;
  mpfr_clear(kpi_lo);
  mpfr_clear(kpi_hi);
  return possible;
}

enum class TrigKind { kCos, kSin };

RatInterval trig_two_pi(const Rat& frac, unsigned long prec_bits, TrigKind kind) {
  if (prec_bits < 16) prec_bits = 16;
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(prec_bits);
  // Reduce the phase to [0, 1) exactly.
  Rat f = frac;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), f.get_num().get_mpz_t(), f.get_den().get_mpz_t());
  f -= Rat(fl);

  mpfr_t tlo, thi;
  mpfr_init2(tlo, prec);
  mpfr_init2(thi, prec);
  two_pi_frac(tlo, thi, f);

  // Critical points of cos on [0, 2pi] are k*pi (k=0,1,2); of sin they are
  // (k + 1/2)*pi, i.e. odd multiples of pi/2.  Work uniformly with k*pi/2:
  // cos extremes at even k (alternating +1/-1), sin extremes at odd k.
  bool bound_hi_one = false, bound_lo_one = false;
  for (unsigned k = 0; k <= 4; ++k) {
    bool relevant = (kind == TrigKind::kCos) ? (k % 2 == 0) : (k % 2 == 1);
    if (!relevant) continue;
    // Test k*(pi/2) against the theta interval: reuse may_contain_k_pi by
    // doubling: k*(pi/2) in [tlo, thi] iff k*pi in [2 tlo, 2 thi].
    mpfr_t t2lo, t2hi;
    mpfr_init2(t2lo, prec);
    mpfr_init2(t2hi, prec);
    mpfr_mul_ui(t2lo, tlo, 2, MPFR_RNDD);
    mpfr_mul_ui(t2hi, thi, 2, MPFR_RNDU);
    bool inside = may_contain_k_pi(t2lo, t2hi, k, prec);
    mpfr_clear(t2lo);
    mpfr_clear(t2hi);
    if (!inside) continue;
    // Value of cos at k*pi/2 (k even): +1 if k % 4 == 0 else -1.
    // Value of sin at k*pi/2 (k odd): +1 if k % 4 == 1 else -1.
    bool is_max = (kind == TrigKind::kCos) ? (k % 4 == 0) : (k % 4 == 1);
    if (is_max) bound_hi_one = true;
    else bound_lo_one = true;
  }

  auto eval = [&](const mpfr_t t, mpfr_rnd_t rnd, mpfr_t out) {
    if (kind == TrigKind::kCos) mpfr_cos(out, t, rnd);
    else mpfr_sin(out, t, rnd);
  };

  Rat lo, hi;
  {
    mpfr_t v1, v2;
    mpfr_init2(v1, prec);
    mpfr_init2(v2, prec);
    eval(tlo, MPFR_RNDD, v1);
    eval(thi, MPFR_RNDD, v2);
    if (mpfr_cmp(v2, v1) < 0) mpfr_set(v1, v2, MPFR_RNDD);
    lo = bound_lo_one ? Rat(-1) : mpfr_to_rat(v1);
    eval(tlo, MPFR_RNDU, v1);
    eval(thi, MPFR_RNDU, v2);
    if (mpfr_cmp(v2, v1) > 0) mpfr_set(v1, v2, MPFR_RNDU);
    hi = bound_hi_one ? Rat(1) : mpfr_to_rat(v1);
    mpfr_clear(v1);
    mpfr_clear(v2);
  }
  mpfr_clear(tlo);
  mpfr_clear(thi);
  if (cmp(lo, Rat(-1)) < 0) lo = -1;
  if (cmp(hi, Rat(1)) > 0) hi = 1;
  return RatInterval(lo, hi);
}

}  // namespace

RatInterval cos_two_pi(const Rat& frac, unsigned long prec_bits) {
  return trig_two_pi(frac, prec_bits, TrigKind::kCos);
}

RatInterval sin_two_pi(const Rat& frac, unsigned long prec_bits) {
  return trig_two_pi(frac, prec_bits, TrigKind::kSin);
}

RatInterval sqrt_enclosure(const RatInterval& x, unsigned long prec_bits) {
  if (x.lo < 0) fail("sqrt of interval with negative lower endpoint");
  if (prec_bits < 16) prec_bits = 16;
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(prec_bits);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_q(t, x.lo.get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(t, t, MPFR_RNDD);
  Rat lo = mpfr_to_rat(t);
  mpfr_set_q(t, x.hi.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(t, t, MPFR_RNDU);
  Rat hi = mpfr_to_rat(t);
  mpfr_clear(t);
  if (lo < 0) lo = 0;
  return RatInterval(lo, hi);
}

}  // namespace monodromy
