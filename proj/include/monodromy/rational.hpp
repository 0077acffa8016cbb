// Exact rational arithmetic: thin wrappers around GMP's mpq_class.
#ifndef MONODROMY_RATIONAL_HPP_
#define MONODROMY_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

#include "monodromy/common.hpp"

namespace monodromy {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
  if (den == 0) fail("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p", or "p/q" with arbitrary-precision components.
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) fail_parse("bad rational literal: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) {
  return mpz_cmp_ui(r.get_den().get_mpz_t(), 1) == 0;
}

// True iff |r| <= 2^-k.
inline bool rat_abs_le_pow2(const Rat& r, unsigned long k) {
  Rat bound(1);
  bound /= Rat(Int(1) << k);
  return cmp(abs(r), bound) <= 0;
}

}  // namespace monodromy

#endif  // MONODROMY_RATIONAL_HPP_
