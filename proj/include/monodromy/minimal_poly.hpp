// Galois orbits and minimal polynomials over Q for elements of a cyclotomic
// field, plus least-degree vanishing polynomials for elements of the
// quadratic algebra.
#ifndef MONODROMY_MINIMAL_POLY_HPP_
#define MONODROMY_MINIMAL_POLY_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "monodromy/quadratic.hpp"
#include "monodromy/rational_poly.hpp"

namespace monodromy {

// All Galois images (k, sigma_k(x)) for k running over (Z/N)^* in increasing
// order; sigma_k sends zeta to zeta^k.
std::vector<std::pair<unsigned long, Cyc>> galois_conjugates(const Cyc& x);

// Minimal polynomial of a field element: the monic product of (X - y) over
// the distinct Galois images y of x.  Irreducible because the orbit of the
// absolute Galois group is transitive on the roots.
RatPoly minimal_polynomial(const Cyc& x);

// Least-degree monic polynomial with rational coefficients vanishing at x in
// the quadratic algebra.  For elements with zero t-component this is the
// minimal polynomial of the field element; otherwise it is found as the
// first linear dependence among the powers of x and verified by exact
// substitution.  (When the algebra splits this is the lcm of the minimal
// polynomials of the two components, hence keeps being squarefree; over the
// degenerate radicand a = 0 a repeated factor can be forced and is returned
// as the honest least-degree vanishing polynomial.)
RatPoly minimal_polynomial(const Ext& x);

// Evaluates p at x inside the algebra (exact Horner).
Ext eval_poly(const RatPoly& p, const Ext& x);
Cyc eval_poly(const RatPoly& p, const Cyc& x);

// If x is a root of unity in Q(zeta_N), returns its exact multiplicative
// order.  In a cyclotomic field every root of unity is (+/-) a power of
// zeta_N, so membership is a finite scan of monomials.
std::optional<unsigned long> root_of_unity_order(const Cyc& x);

// All m with euler_phi(m) = d (finite, since phi(m) -> infinity).
std::vector<unsigned long> totient_preimage(unsigned long d);

}  // namespace monodromy

#endif  // MONODROMY_MINIMAL_POLY_HPP_
