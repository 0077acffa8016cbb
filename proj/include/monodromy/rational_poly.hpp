// Dense univariate polynomials over Q, plus Sturm-sequence real-root counting.
#ifndef MONODROMY_RATIONAL_POLY_HPP_
#define MONODROMY_RATIONAL_POLY_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monodromy/rational.hpp"

namespace monodromy {

// Coefficients are stored low-to-high with no trailing zeros.
// The zero polynomial has an empty coefficient vector and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly zero() { return RatPoly(); }
  static RatPoly constant(const Rat& a);
  static RatPoly x();                       // the monomial X
  static RatPoly linear(const Rat& root);   // X - root

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& operator[](size_t i) const { return c_[i]; }
  const Rat& leading() const;

  bool operator==(const RatPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly scaled(const Rat& a) const;

  // Quotient and remainder; divisor must be nonzero.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;

  RatPoly derivative() const;
  RatPoly monic() const;  // leading coefficient scaled to 1 (poly must be nonzero)

  Rat eval(const Rat& x) const;

  // True iff monic with integer coefficients throughout.
  bool is_monic_integer() const;

  std::string str(const std::string& var = "X") const;

  void trim();

 private:
  std::vector<Rat> c_;
};

// Monic gcd via the Euclidean algorithm (gcd(0,0) = 0).
RatPoly poly_gcd(RatPoly a, RatPoly b);

// p / gcd(p, p'): same roots, all simple.
RatPoly squarefree_part(const RatPoly& p);

// Number of distinct real roots of p in the closed interval [lo, hi],
// endpoints included.  p must be nonzero.
long count_real_roots_in(const RatPoly& p, const Rat& lo, const Rat& hi);

// Number of distinct real roots of p anywhere (uses a Cauchy bound).
long count_real_roots(const RatPoly& p);

// The n-th cyclotomic polynomial as integer coefficients, low-to-high.
// Computed by exact division of X^n - 1 by the lower-level factors; memoized.
const std::vector<Int>& cyclotomic_polynomial(unsigned long n);

RatPoly cyclotomic_poly_rat(unsigned long n);

// Euler's totient and a few small number-theory helpers.
unsigned long euler_phi(unsigned long n);
std::vector<unsigned long> divisors(unsigned long n);

}  // namespace monodromy

#endif  // MONODROMY_RATIONAL_POLY_HPP_
