// Finite/infinite order decisions for projective braid-image matrices, the
// coprime-residue trace scan, exact group closures, and classification of
// the finite image groups inside PGL(2).
//
// The finiteness criterion: an invertible M has finite projective order iff
// the ratio of its eigenvalues is a root of unity, iff beta = tr^2/det - 2
// is an algebraic integer all of whose real Galois images lie in [-2, 2].
// The decision runs entirely in exact arithmetic (minimal polynomial,
// integrality, Sturm root counting), and every `infinite` verdict carries a
// certificate: a parabolic flag, a non-integral trace ratio, or a Galois
// index whose image is certified outside [-2, 2] by interval refinement.
#ifndef MONODROMY_ORDER_HPP_
#define MONODROMY_ORDER_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monodromy/braid_rep.hpp"
#include "monodromy/numeric_eval.hpp"
#include "monodromy/rational_poly.hpp"

namespace monodromy {

// Default search caps; the CLI can override them per invocation.
constexpr unsigned long kDefaultClosureCap = 20000;
constexpr unsigned long kDefaultPowerCap = 10000;

struct OrderVerdict {
  enum class Kind { kFinite, kInfinite, kUndecidedCap };
  Kind kind = Kind::kUndecidedCap;
  unsigned long order = 0;  // valid when kind == kFinite
  // One of: "scalar", "finite_ratio", "finite", "parabolic",
  // "nonintegral_trace", "galois_escape", "det_infinite_order",
  // "cap_exceeded".
  std::string reason;
  std::optional<unsigned long> witness_k;   // Galois index of an escaping image
  std::optional<ComplexBox> witness_box;    // certified enclosure of that image
  bool witness_nonreal = false;             // escape by leaving the real axis
  std::optional<RatPoly> ratio_trace_minpoly;

  bool finite() const { return kind == Kind::kFinite; }
};

// Exact projective equality: cross-multiplication over all entry pairs,
// M[i][j] * N[k][l] == M[k][l] * N[i][j].
bool projective_equal(const Mat2& m, const Mat2& n);

// Trace and determinant of the image of the commutator-shaped word
// g2 g1^-2 g2, checked against the closed forms
//   tr = 2 - q - q^-1 + q^2 + q^-2,    det = 1.
struct SigmaTraceReport {
  Ext trace;
  Ext det;
  Cyc closed_form;
  bool trace_matches;
  bool det_is_one;
};

SigmaTraceReport trace_of_sigma(const LevelContext& ctx);

// Scan of 2 - w - w^-1 + w^2 + w^-2 over all primitive (l+2)-th roots
// w = zeta_{l+2}^k, gcd(k, l+2) = 1, deciding membership in [-2, 2] exactly.
struct ScanRow {
  unsigned long k;
  Cyc value;        // exact, conductor l+2
  ComplexBox box;   // certified enclosure
  bool bounded;     // value in [-2, 2]
};

struct ScanReport {
  long level;
  std::vector<ScanRow> rows;
  bool all_bounded;
  std::optional<unsigned long> first_violation_k;
};

ScanReport masbaum_scan(long level, unsigned long bits);

// Order of M in PGL(2): the decision procedure described above, followed by
// exact powering to find the order in the finite case.
OrderVerdict projective_order(const Mat2& m, unsigned long power_cap = kDefaultPowerCap);

// Order of M in GL(2): finite iff the projective order is finite and det(M)
// is a root of unity (tested by matching the minimal polynomial of det
// against candidate cyclotomic polynomials).
OrderVerdict gl_order(const Mat2& m, unsigned long power_cap = kDefaultPowerCap);

struct ClosureElement {
  Mat2 m;
  unsigned long generation;  // BFS depth at discovery
  std::string canon_key;     // canonical serialization used for ordering
};

struct Closure {
  std::vector<ClosureElement> elements;  // sorted: generation, then key
  bool complete;
  unsigned long cap;
};

// Breadth-first closure of the generated group.  With `projective` set,
// elements are identified up to scalars (hash acceleration by scaling with
// the inverse of the first invertible entry; elements with no invertible
// entry fall back to a linear scan with projective_equal).
Closure group_closure(const std::vector<Mat2>& gens, unsigned long cap, bool projective);

enum class GroupId { kCyclic, kKlein4, kDihedral, kA4, kS4, kA5, kIndeterminate };

std::string group_id_name(GroupId id);

struct PresentationWitness {
  std::string relation;   // e.g. "a^3 = b^2 = (ab)^3 = 1"
  size_t a_index;         // indices into the closure element list
  size_t b_index;
  bool verified;
};

struct ClassifyReport {
  GroupId id = GroupId::kIndeterminate;
  unsigned long parameter = 0;  // n for Cyclic(n) / Dihedral(n)
  unsigned long group_order = 0;
  bool closure_complete = false;
  std::map<unsigned long, unsigned long> element_order_histogram;
  std::optional<PresentationWitness> witness;
  Closure closure{{}, false, 0};
};

// Classifies the group generated projectively by `gens` inside PGL(2).
ClassifyReport classify_group(const std::vector<Mat2>& gens,
                              unsigned long closure_cap = kDefaultClosureCap,
                              unsigned long power_cap = kDefaultPowerCap);

}  // namespace monodromy

#endif  // MONODROMY_ORDER_HPP_
