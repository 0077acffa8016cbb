#include "monodromy/cyclotomic.hpp"

#include <numeric>
#include <sstream>

namespace monodromy {

namespace {

long mod_long(long a, unsigned long n) {
  long m = a % static_cast<long>(n);
  return m < 0 ? m + static_cast<long>(n) : m;
}

}  // namespace

Cyc Cyc::zero(unsigned long n) {
  if (n == 0) fail("conductor must be >= 1");
  return Cyc(n, std::vector<Rat>(euler_phi(n), Rat(0)));
}

Cyc Cyc::one(unsigned long n) { return from_rat(n, Rat(1)); }

Cyc Cyc::from_rat(unsigned long n, const Rat& a) {
  Cyc z = zero(n);
  z.c_[0] = a;
  return z;
}

Cyc Cyc::root(unsigned long n, long k) {
  return from_terms(n, {{k, Rat(1)}});
}

Cyc Cyc::from_terms(unsigned long n, const std::vector<std::pair<long, Rat>>& terms) {
  if (n == 0) fail("conductor must be >= 1");
  std::vector<Rat> v(n, Rat(0));
  for (const auto& [e, a] : terms) v[mod_long(e, n)] += a;
  reduce(n, v);
  v.resize(euler_phi(n));
  return Cyc(n, std::move(v));
}

// Reduces a degree-< N polynomial in zeta modulo Phi_N in place; on return
// only the first phi(N) entries may be nonzero.
void Cyc::reduce(unsigned long n, std::vector<Rat>& v) {
  const std::vector<Int>& phi = cyclotomic_polynomial(n);
  size_t deg = phi.size() - 1;  // = euler_phi(n)
  Rat tmp;
  for (size_t e = v.size(); e-- > deg;) {
    if (v[e] == 0) continue;
    Rat lead;
    swap(lead, v[e]);
    // v -= lead * X^(e-deg) * Phi; Phi is monic so v[e] cancels exactly.
    for (size_t j = 0; j < deg; ++j) {
      if (phi[j] == 0) continue;
      tmp = lead;
      tmp *= Rat(phi[j]);
      v[e - deg + j] -= tmp;
    }
  }
}

bool Cyc::is_zero() const {
  for (const Rat& a : c_)
    if (a != 0) return false;
  return true;
}

bool Cyc::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::optional<Rat> Cyc::as_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

bool Cyc::operator==(const Cyc& o) const {
  if (n_ != o.n_) fail("conductor mismatch in comparison");
  return c_ == o.c_;
}

Cyc Cyc::operator+(const Cyc& o) const {
  Cyc r(*this);
  r += o;
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
  Cyc r(*this);
  r -= o;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (n_ != o.n_) fail("conductor mismatch in addition");
  for (size_t i = 0; i < c_.size(); ++i)
    if (o.c_[i] != 0) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  if (n_ != o.n_) fail("conductor mismatch in subtraction");
  for (size_t i = 0; i < c_.size(); ++i)
    if (o.c_[i] != 0) c_[i] -= o.c_[i];
  return *this;
}

Cyc Cyc::operator*(const Cyc& o) const {
  if (n_ != o.n_) fail("conductor mismatch in multiplication");
  // Convolve into exponent space mod N (zeta^N = 1), then reduce mod Phi_N.
  std::vector<Rat> v(n_, Rat(0));
  Rat tmp;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      tmp = c_[i];
      tmp *= o.c_[j];
      size_t e = i + j;
      if (e >= n_) e -= n_;
      v[e] += tmp;
    }
  }
  reduce(n_, v);
  v.resize(c_.size());
  return Cyc(n_, std::move(v));
}

Cyc Cyc::operator-() const {
  Cyc r(*this);
  for (Rat& a : r.c_)
    if (a != 0) a = -a;
  return r;
}

Cyc Cyc::scaled(const Rat& a) const {
  Cyc r(*this);
  for (Rat& x : r.c_)
    if (x != 0) x *= a;
  return r;
}

Cyc Cyc::inverse() const {
  if (is_zero()) fail("inverse of zero");
  // Extended Euclid in Q[X]: u * f + w * Phi_N = 1, so u is the inverse.
  RatPoly f{std::vector<Rat>(c_)};
  RatPoly g = cyclotomic_poly_rat(n_);
  RatPoly r0 = g, r1 = f;
  RatPoly u0 = RatPoly::zero(), u1 = RatPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    RatPoly u2 = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  // r0 = gcd(f, Phi_N); Phi_N is irreducible, so r0 is a nonzero constant.
  if (r0.degree() != 0) fail_consistency("cyclotomic polynomial not coprime to nonzero element");
  RatPoly inv = u0.scaled(Rat(1) / r0[0]);
  std::vector<Rat> v(n_, Rat(0));
  for (size_t i = 0; i < inv.coeffs().size(); ++i) v[i] = inv[i];
  reduce(n_, v);
  v.resize(c_.size());
  return Cyc(n_, std::move(v));
}

Cyc Cyc::pow(long e) const {
  if (e == 0) return one(n_);
  Cyc base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  Cyc acc = one(n_);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Cyc Cyc::galois(long k) const {
  long km = mod_long(k, n_);
  if (std::gcd(static_cast<unsigned long>(km), n_) != 1)
    fail("galois exponent not coprime to conductor");
  std::vector<Rat> v(n_, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    v[(i * static_cast<unsigned long>(km)) % n_] += c_[i];
  }
  reduce(n_, v);
  v.resize(c_.size());
  return Cyc(n_, std::move(v));
}

Cyc Cyc::conj() const { return galois(-1); }

bool Cyc::is_real() const { return conj() == *this; }

Cyc Cyc::lift(unsigned long m) const {
  if (m % n_ != 0) fail("lift target must be a multiple of the conductor");
  if (m == n_) return *this;
  unsigned long s = m / n_;
  std::vector<Rat> v(m, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) v[i * s] += c_[i];
  reduce(m, v);
  v.resize(euler_phi(m));
  return Cyc(m, std::move(v));
}

unsigned long Cyc::support_size() const {
  unsigned long k = 0;
  for (const Rat& a : c_)
    if (a != 0) ++k;
  return k;
}

std::string Cyc::key() const {
  std::ostringstream os;
  os << n_ << ':';
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  return os.str();
}

std::string Cyc::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    first = false;
    Rat a = abs(Rat(c_[i]));
    if (a != 1 || i == 0) os << rat_str(a);
    if (i >= 1) {
      if (a != 1) os << "*";
      os << "z";
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Cyc, Cyc> align_conductors(const Cyc& a, const Cyc& b) {
  unsigned long m = std::lcm(a.conductor(), b.conductor());
  return {a.lift(m), b.lift(m)};
}

}  // namespace monodromy
