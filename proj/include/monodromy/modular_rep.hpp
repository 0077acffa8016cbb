// The genus-one modular action on level-l characters: an (l+2)-row exact
// sine kernel S (stored unnormalized, with its sqrt(2/(l+2)) prefactor
// tracked symbolically as an exponent) and the diagonal twist matrix T,
// both over Q(zeta_{8(l+2)}).  Includes the projective relation checks, a
// breadth-first finiteness certificate for the generated projective group,
// and an exact lattice-membership (denominator-discreteness) certificate
// for every element, using an exact Gauss-sum construction of sqrt(l+2).
#ifndef MONODROMY_MODULAR_REP_HPP_
#define MONODROMY_MODULAR_REP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "monodromy/cyclotomic.hpp"
#include "monodromy/intervals.hpp"

namespace monodromy {

// Dense square matrix over a cyclotomic field.
class CycMat {
 public:
  CycMat(size_t n, const Cyc& fill);
  static CycMat identity(size_t n, unsigned long conductor);
  static CycMat diagonal(const std::vector<Cyc>& d);

  size_t size() const { return n_; }
  const Cyc& at(size_t r, size_t c) const { return e_[r * n_ + c]; }
  Cyc& at(size_t r, size_t c) { return e_[r * n_ + c]; }

  CycMat operator*(const CycMat& o) const;
  bool operator==(const CycMat& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const CycMat& o) const { return !(*this == o); }
  CycMat scaled(const Cyc& s) const;
  CycMat scaled_rat(const Rat& r) const;
  CycMat transpose() const;
  CycMat conj() const;  // entrywise complex conjugation

  bool is_zero() const;
  std::string key() const;

 private:
  size_t n_;
  std::vector<Cyc> e_;
};

// Projective equality generalized to any size: all entry pairs must satisfy
// the cross-multiplication identity.
bool projective_equal(const CycMat& a, const CycMat& b);

// Canonical projective key (scale by the inverse of the first nonzero
// entry; entries live in a field, so this is total for nonzero matrices).
std::string projective_canon_key(const CycMat& m);

struct ModularRep {
  long level = 1;
  unsigned long conductor = 24;  // 8 (l + 2)
  size_t rank = 2;               // l + 1
  CycMat s_matrix{1, Cyc::zero(1)};   // unnormalized: entries sin(pi j k / (l+2))
  CycMat t_matrix{1, Cyc::zero(1)};   // diagonal twists
  // The true S is sqrt(2/(l+2)) * s_matrix; the prefactor exponent is
  // tracked per element during closure.  sqrt_factor is the exact value of
  // sqrt(2/(l+2)) inside the session field, used only by certificates.
  Cyc sqrt_factor{Cyc::zero(1)};
};

ModularRep build_modular(long level);

// Exact value of sqrt(n) inside Q(zeta_N) built from quadratic Gauss sums;
// requires 8n | N... (any N with enough roots: 8 | N and n | N).  The result
// is certified: its square is checked against n and its sign made positive.
Cyc exact_sqrt(unsigned long n, unsigned long conductor);

struct RelationsReport {
  bool s2_matches_st3 = false;  // S^2 ~ (S T)^3 projectively
  bool s4_is_identity = false;  // S^4 ~ 1 projectively
  bool passed = false;
};

RelationsReport modular_relations_check(const ModularRep& rep);

struct ModularElement {
  CycMat a;                  // stored matrix (true element = c^e * a)
  long s_exponent;           // e: how many true-S factors entered the product
  unsigned long generation;  // BFS depth
  std::string canon_key;
  bool certificate_ok;       // entries of c^e * a lie in (1/(2(l+2))) Z[zeta]
};

struct ModularImageReport {
  long level = 0;
  bool finite = false;
  bool cap_exceeded = false;
  unsigned long order = 0;  // number of projective classes found
  bool all_certified = false;
  RelationsReport relations;
  std::vector<ModularElement> elements;  // sorted: generation, then key
};

// BFS closure of the projective group generated by the true S and T, with
// the per-element lattice certificate.
ModularImageReport modular_image_finite(const ModularRep& rep, unsigned long cap);

// Entrywise unitarity defect |(S S^dagger - id)[j][k]| of the numerically
// normalized matrix, as certified enclosures: returns the largest upper
// bound across entries, computed at the given working precision.
Rat unitarity_defect_bound(const ModularRep& rep, unsigned long bits);

}  // namespace monodromy

#endif  // MONODROMY_MODULAR_REP_HPP_
