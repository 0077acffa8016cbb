#include "monodromy/quadratic.hpp"

namespace monodromy {

Ext::Ext(Cyc u, Cyc a) : u_(std::move(u)), v_(Cyc::zero(u_.conductor())), a_(std::move(a)) {
  if (u_.conductor() != a_.conductor()) fail("radicand conductor mismatch");
}

Ext::Ext(Cyc u, Cyc v, Cyc a) : u_(std::move(u)), v_(std::move(v)), a_(std::move(a)) {
  if (u_.conductor() != v_.conductor() || u_.conductor() != a_.conductor())
    fail("component conductor mismatch");
}

Ext Ext::sqrt_gen(const Cyc& a) {
  unsigned long n = a.conductor();
  return Ext(Cyc::zero(n), Cyc::one(n), a);
}

void Ext::check_compatible(const Ext& o) const {
  if (conductor() != o.conductor()) fail("conductor mismatch in quadratic algebra");
  if (!(a_ == o.a_)) fail("radicand mismatch in quadratic algebra");
}

bool Ext::operator==(const Ext& o) const {
  check_compatible(o);
  return u_ == o.u_ && v_ == o.v_;
}

Ext Ext::operator+(const Ext& o) const {
  check_compatible(o);
  return Ext(u_ + o.u_, v_ + o.v_, a_);
}

Ext Ext::operator-(const Ext& o) const {
  check_compatible(o);
  return Ext(u_ - o.u_, v_ - o.v_, a_);
}

Ext Ext::operator*(const Ext& o) const {
  check_compatible(o);
  // (u1 + v1 t)(u2 + v2 t) = u1 u2 + a v1 v2 + (u1 v2 + v1 u2) t.
  Cyc u = u_ * o.u_;
  if (!v_.is_zero() && !o.v_.is_zero()) u += a_ * (v_ * o.v_);
  Cyc v = Cyc::zero(conductor());
  if (!o.v_.is_zero()) v += u_ * o.v_;
  if (!v_.is_zero()) v += v_ * o.u_;
  return Ext(std::move(u), std::move(v), a_);
}

Ext Ext::operator-() const { return Ext(-u_, -v_, a_); }

Cyc Ext::norm() const {
  Cyc n = u_ * u_;
  if (!v_.is_zero()) n -= a_ * (v_ * v_);
  return n;
}

Ext Ext::inverse() const {
  // 1/(u + v t) = (u - v t) / (u^2 - a v^2).
  Cyc n = norm();
  if (n.is_zero()) fail("element is not invertible in the quadratic algebra");
  Cyc ninv = n.inverse();
  return Ext(u_ * ninv, (-v_) * ninv, a_);
}

Ext Ext::pow(long e) const {
  Ext acc = one(conductor(), a_);
  if (e == 0) return acc;
  Ext base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string Ext::str() const {
  if (v_.is_zero()) return u_.str();
  std::string s = "(" + u_.str() + ") + (" + v_.str() + ")*t";
  return s;
}

}  // namespace monodromy
