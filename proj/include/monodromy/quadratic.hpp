// Elements u + v*t of the quadratic algebra Q(zeta_N)[t] / (t^2 - a).
// The radicand a travels with each element; binary operations require equal
// conductors and radicands.  When a is not a square in Q(zeta_N) the algebra
// is a field; when it is a square the algebra splits, and when a = 0 it has
// a nilpotent part.  All arithmetic below is valid in every case; inversion
// exists exactly when the norm u^2 - a*v^2 is nonzero.
#ifndef MONODROMY_QUADRATIC_HPP_
#define MONODROMY_QUADRATIC_HPP_

#include <string>

#include "monodromy/cyclotomic.hpp"

namespace monodromy {

class Ext {
 public:
  // The scalar u embedded in the algebra with radicand a.
  Ext(Cyc u, Cyc a);
  Ext(Cyc u, Cyc v, Cyc a);

  static Ext zero(unsigned long n, const Cyc& a) { return Ext(Cyc::zero(n), a); }
  static Ext one(unsigned long n, const Cyc& a) { return Ext(Cyc::one(n), a); }
  // The generator t itself.
  static Ext sqrt_gen(const Cyc& a);

  const Cyc& u() const { return u_; }
  const Cyc& v() const { return v_; }
  const Cyc& radicand() const { return a_; }
  unsigned long conductor() const { return u_.conductor(); }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool is_one() const { return u_.is_one() && v_.is_zero(); }
  // True iff the t-component vanishes (the value lies in Q(zeta_N)).
  bool is_cyclotomic() const { return v_.is_zero(); }

  bool operator==(const Ext& o) const;
  bool operator!=(const Ext& o) const { return !(*this == o); }

  Ext operator+(const Ext& o) const;
  Ext operator-(const Ext& o) const;
  Ext operator*(const Ext& o) const;
  Ext operator-() const;
  Ext& operator+=(const Ext& o) { *this = *this + o; return *this; }
  Ext& operator*=(const Ext& o) { *this = *this * o; return *this; }

  Ext scaled(const Rat& r) const { return Ext(u_.scaled(r), v_.scaled(r), a_); }
  Ext scaled_cyc(const Cyc& c) const { return Ext(u_ * c, v_ * c, a_); }

  // N(x) = u^2 - a v^2 = x * (u - v t); multiplicative.
  Cyc norm() const;
  Ext inverse() const;  // fails when the norm vanishes
  Ext pow(long e) const;

  // The algebra involution t -> -t (not complex conjugation).
  Ext t_flip() const { return Ext(u_, -v_, a_); }

  std::string key() const { return u_.key() + "|" + v_.key(); }
  std::string str() const;

 private:
  void check_compatible(const Ext& o) const;

  Cyc u_, v_, a_;
};

}  // namespace monodromy

#endif  // MONODROMY_QUADRATIC_HPP_
