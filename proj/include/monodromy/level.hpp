// Per-level working field.  A session at level l fixes the cyclotomic field
// Q(zeta_N) with N = 8(l+2), which houses every root needed downstream:
//   q        = zeta^8          (primitive (l+2)-th root of unity)
//   q^(1/4)  = zeta^2,  q^(1/2) = zeta^4,  zeta_8 = zeta^(l+2),  i = zeta^(N/4)
// and the quadratic algebra Q(zeta)[t] / (t^2 - q(1+q+q^2)).
// At l = 1 the radicand vanishes; t is then the square root of 0 and is
// stored as the exact value 0, which keeps every matrix identity exact and
// makes algebra equality agree with equality of the complex matrices.
#ifndef MONODROMY_LEVEL_HPP_
#define MONODROMY_LEVEL_HPP_

#include <memory>

#include "monodromy/quadratic.hpp"

namespace monodromy {

struct LevelContext {
  long level;               // l >= 1
  unsigned long conductor;  // 8 * (l + 2)
  Cyc q;                    // zeta^8
  Cyc q_inv;
  Cyc q_quarter;            // q^(1/4)
  Cyc q_quarter_inv;
  Cyc radicand;             // a = q (1 + q + q^2)
  Ext t;                    // sqrt(a) in the algebra; exactly 0 when a = 0

  explicit LevelContext(long l);

  // Shared, cached context per level (contexts are immutable).
  static std::shared_ptr<const LevelContext> get(long l);

  Ext embed(const Cyc& c) const { return Ext(c, radicand); }
  Ext from_rat(const Rat& r) const { return embed(Cyc::from_rat(conductor, r)); }
  Ext ext_zero() const { return Ext::zero(conductor, radicand); }
  Ext ext_one() const { return Ext::one(conductor, radicand); }
  // q^k as a field element (k may be negative).
  Cyc q_pow(long k) const { return Cyc::root(conductor, 8 * k); }
};

}  // namespace monodromy

#endif  // MONODROMY_LEVEL_HPP_
