// Exact arithmetic in cyclotomic fields Q(zeta_N) on the power basis
// 1, zeta, ..., zeta^(phi(N)-1), reduced modulo the N-th cyclotomic
// polynomial.  Equality of reduced coefficient vectors is equality in the
// field, so all comparisons are canonical.
#ifndef MONODROMY_CYCLOTOMIC_HPP_
#define MONODROMY_CYCLOTOMIC_HPP_

#include <optional>
#include <string>
#include <vector>

#include "monodromy/rational.hpp"
#include "monodromy/rational_poly.hpp"

namespace monodromy {

class Cyc {
 public:
  Cyc() : n_(1), c_(1, Rat(0)) {}

  // The zero / one / rational constant of Q(zeta_N).
  static Cyc zero(unsigned long n);
  static Cyc one(unsigned long n);
  static Cyc from_rat(unsigned long n, const Rat& a);
  // zeta_N^k (k may be any integer; exponents are reduced mod N).
  static Cyc root(unsigned long n, long k);
  // Element from an arbitrary exponent-coefficient list: sum a_i zeta^{e_i}.
  static Cyc from_terms(unsigned long n, const std::vector<std::pair<long, Rat>>& terms);

  unsigned long conductor() const { return n_; }
  unsigned long dim() const { return static_cast<unsigned long>(c_.size()); }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  // Returns the value as a rational if it lies in Q.
  std::optional<Rat> as_rational() const;

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }

  Cyc scaled(const Rat& a) const;
  Cyc inverse() const;  // fails on zero
  Cyc pow(long e) const;

  // Galois action zeta -> zeta^k; requires gcd(k, N) = 1.
  Cyc galois(long k) const;
  // Complex conjugation, i.e. galois(-1).
  Cyc conj() const;
  // True iff fixed by complex conjugation (the value is a real number).
  bool is_real() const;

  // Re-express in Q(zeta_M) for a multiple M of the conductor.
  Cyc lift(unsigned long m) const;

  // Number of nonzero coefficients (used by performance-minded callers).
  unsigned long support_size() const;

  // Compact canonical string, usable as a hash key: "N:c0,c1,...".
  std::string key() const;
  std::string str() const;  // human-readable, in terms of z = zeta_N

 private:
  Cyc(unsigned long n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
  static void reduce(unsigned long n, std::vector<Rat>& v);  // v has size n

  unsigned long n_;
  std::vector<Rat> c_;  // size phi(n), reduced
};

// Lifts both elements to the lcm of their conductors.
std::pair<Cyc, Cyc> align_conductors(const Cyc& a, const Cyc& b);

}  // namespace monodromy

#endif  // MONODROMY_CYCLOTOMIC_HPP_
