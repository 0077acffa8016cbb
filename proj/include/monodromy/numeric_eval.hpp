// Certified numeric enclosures for field/algebra elements, and exact sign
// decisions for certified-real quantities.  The generator t of the quadratic
// algebra is mapped to the principal square root of the radicand; its branch
// is pinned down by exact realness/sign pre-tests, never by floating-point
// guesswork.
#ifndef MONODROMY_NUMERIC_EVAL_HPP_
#define MONODROMY_NUMERIC_EVAL_HPP_

#include "monodromy/cyclotomic.hpp"
#include "monodromy/intervals.hpp"
#include "monodromy/quadratic.hpp"

namespace monodromy {

// Enclosure of the complex value of x with zeta_N = exp(2*pi*i/N).
ComplexBox numeric_interval(const Cyc& x, unsigned long bits);

// Enclosure of u + v * sqrt(a) with the principal branch of the square root.
// Internally retries at doubled precision when an intermediate enclosure is
// too coarse to continue; the returned box never widens as bits doubles.
ComplexBox numeric_interval(const Ext& x, unsigned long bits);

enum class Sign { kLess, kEqual, kGreater };

// Exact test: does the complex value of x lie on the real axis?
// For elements with a t-component this uses the algebra conjugation
// t -> (+/-) c t with c^2 = conj(a)/a, resolving the sign rigorously from
// disjoint enclosures.
bool is_real_certified(const Cyc& x);
bool is_real_certified(const Ext& x);

// Decides x <=> threshold for a certified-real x.  Interval refinement up to
// refine_cap_bits; past the cap an exact zero analysis settles equality, and
// a certified-nonzero value keeps refining until the enclosure separates.
Sign sign_decide(const Cyc& x, const Rat& threshold);
Sign sign_decide(const Ext& x, const Rat& threshold);

// True iff the numeric value of x is exactly zero (the coefficient vector
// vanishes, or the t-component cancels the scalar on the principal branch).
bool numeric_value_is_zero(const Ext& x);

}  // namespace monodromy

#endif  // MONODROMY_NUMERIC_EVAL_HPP_
