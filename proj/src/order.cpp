#include "monodromy/order.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "monodromy/minimal_poly.hpp"

namespace monodromy {

bool projective_equal(const Mat2& m, const Mat2& n) {
  // M ~ N in the projective group iff all cross products agree:
  // M[i][j] N[k][l] = M[k][l] N[i][j] for every pair of positions.
  bool m_zero = true, n_zero = true;
  for (int i = 0; i < 4; ++i) {
    if (!m.at(i / 2, i % 2).is_zero()) m_zero = false;
    if (!n.at(i / 2, i % 2).is_zero()) n_zero = false;
  }
  if (m_zero || n_zero) fail("projective comparison with a zero matrix");
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) {
      Ext lhs = m.at(p / 2, p % 2) * n.at(q / 2, q % 2);
      Ext rhs = m.at(q / 2, q % 2) * n.at(p / 2, p % 2);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

SigmaTraceReport trace_of_sigma(const LevelContext& ctx) {
  Mat2 m = eval_braid(ctx, Word::parse(Alphabet::kBraid, "g2 g1^-2 g2"));
  Cyc closed = Cyc::from_rat(ctx.conductor, Rat(2)) - ctx.q_pow(1) - ctx.q_pow(-1) +
               ctx.q_pow(2) + ctx.q_pow(-2);
  SigmaTraceReport rep{m.trace(), m.det(), closed, false, false};
  rep.trace_matches = rep.trace == ctx.embed(closed);
  rep.det_is_one = rep.det.is_one();
  return rep;
}

ScanReport masbaum_scan(long level, unsigned long bits) {
  if (level < 1) fail("level must be >= 1");
  unsigned long m = static_cast<unsigned long>(level + 2);
  ScanReport rep{level, {}, true, std::nullopt};
  for (unsigned long k = 1; k < m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    Cyc w = Cyc::root(m, static_cast<long>(k));
    Cyc value = Cyc::from_rat(m, Rat(2)) - w - w.galois(-1) + w * w + (w * w).galois(-1);
    Sign hi = sign_decide(value, Rat(2));
    Sign lo = sign_decide(value, Rat(-2));
    bool bounded = hi != Sign::kGreater && lo != Sign::kLess;
    rep.rows.push_back({k, value, numeric_interval(value, bits), bounded});
    if (!bounded && !rep.first_violation_k) rep.first_violation_k = k;
    if (!bounded) rep.all_bounded = false;
  }
  return rep;
}

namespace {

// Refines an enclosure of val until it certifies the escape: either the
// value is real and strictly outside [-2, 2], or it is off the real axis.
std::pair<ComplexBox, bool> certify_escape(const Cyc& val) {
  constexpr unsigned long kCap = 1ul << 20;
  if (val.is_real()) {
    bool above = sign_decide(val, Rat(2)) == Sign::kGreater;
    bool below = sign_decide(val, Rat(-2)) == Sign::kLess;
    if (!above && !below) fail_consistency("escape witness value lies in [-2, 2]");
    for (unsigned long p = 64; p <= kCap; p *= 2) {
      ComplexBox box = numeric_interval(val, p);
      if (above && box.re.lo > 2) return {box, false};
      if (below && box.re.hi < -2) return {box, false};
    }
  } else {
    for (unsigned long p = 64; p <= kCap; p *= 2) {
      ComplexBox box = numeric_interval(val, p);
      if (box.im.excludes_zero()) return {box, true};
    }
  }
  fail_consistency("escape witness enclosure did not converge");
}

// Finds the smallest Galois index whose image of beta escapes [-2, 2].
void attach_galois_witness(OrderVerdict& v, const Ext& beta) {
  if (!beta.is_cyclotomic()) return;  // no witness machinery for t-components
  for (const auto& [k, val] : galois_conjugates(beta.u())) {
    bool escapes;
    if (val.is_real()) {
      escapes = sign_decide(val, Rat(2)) == Sign::kGreater ||
                sign_decide(val, Rat(-2)) == Sign::kLess;
    } else {
      escapes = true;
    }
    if (!escapes) continue;
    auto [box, nonreal] = certify_escape(val);
    v.witness_k = k;
    v.witness_box = box;
    v.witness_nonreal = nonreal;
    return;
  }
  fail_consistency("root-count deficit without an escaping Galois image");
}

}  // namespace

OrderVerdict projective_order(const Mat2& m, unsigned long power_cap) {
  OrderVerdict v;
  if (m.det().norm().is_zero()) fail("projective_order requires an invertible matrix");
  if (m.is_scalar()) {
    v.kind = OrderVerdict::Kind::kFinite;
    v.order = 1;
    v.reason = "scalar";
    return v;
  }
  Ext tr = m.trace();
  Ext det = m.det();
  Ext tr2 = tr * tr;
  if (tr2 == det.scaled(Rat(4))) {
    // Repeated eigenvalue on a non-scalar matrix: a parabolic element,
    // of infinite order in any linear or projective sense.
    v.kind = OrderVerdict::Kind::kInfinite;
    v.reason = "parabolic";
    return v;
  }
  // beta = mu + 1/mu for the eigenvalue ratio mu; finite order iff mu is a
  // root of unity iff beta is an algebraic integer whose real conjugates all
  // stay within [-2, 2].
  Ext beta = tr2 * det.inverse() - Ext(Cyc::from_rat(m.conductor(), Rat(2)), m.at(0, 0).radicand());
  RatPoly mp = minimal_polynomial(beta);
  v.ratio_trace_minpoly = mp;
  if (!mp.is_monic_integer()) {
    v.kind = OrderVerdict::Kind::kInfinite;
    v.reason = "nonintegral_trace";
    return v;
  }
  long bounded_real_roots = count_real_roots_in(mp, Rat(-2), Rat(2));
  if (bounded_real_roots < mp.degree()) {
    v.kind = OrderVerdict::Kind::kInfinite;
    v.reason = "galois_escape";
    attach_galois_witness(v, beta);
    return v;
  }
  // All conjugates of beta lie in [-2, 2]: mu is a root of unity and the
  // order is reached by exact powering.
  Mat2 acc = m;
  for (unsigned long n = 1; n <= power_cap; ++n) {
    if (acc.is_scalar()) {
      v.kind = OrderVerdict::Kind::kFinite;
      v.order = n;
      v.reason = "finite_ratio";
      return v;
    }
    acc = acc * m;
  }
  v.kind = OrderVerdict::Kind::kUndecidedCap;
  v.reason = "cap_exceeded";
  return v;
}

OrderVerdict gl_order(const Mat2& m, unsigned long power_cap) {
  OrderVerdict pv = projective_order(m, power_cap);
  if (!pv.finite()) return pv;
  // Projective order p with M^p = s * id; the GL order is p times the
  // multiplicative order of s, provided det(M) is a root of unity.
  Ext det = m.det();
  RatPoly mp = minimal_polynomial(det);
  bool det_torsion = false;
  for (unsigned long cand : totient_preimage(static_cast<unsigned long>(mp.degree()))) {
    if (mp == cyclotomic_poly_rat(cand).monic()) {
      det_torsion = true;
      break;
    }
  }
  if (!det_torsion) {
    OrderVerdict v;
    v.kind = OrderVerdict::Kind::kInfinite;
    v.reason = "det_infinite_order";
    v.ratio_trace_minpoly = pv.ratio_trace_minpoly;
    return v;
  }
  Mat2 mp_pow = m.pow(static_cast<long>(pv.order));
  auto s = mp_pow.scalar_value();
  if (!s) fail_consistency("projective order does not yield a scalar power");
  Ext acc = *s;
  for (unsigned long j = 1; pv.order * j <= power_cap; ++j) {
    if (acc.is_one()) {
      OrderVerdict v;
      v.kind = OrderVerdict::Kind::kFinite;
      v.order = pv.order * j;
      v.reason = "finite";
      v.ratio_trace_minpoly = pv.ratio_trace_minpoly;
      return v;
    }
    acc *= *s;
  }
  OrderVerdict v;
  v.kind = OrderVerdict::Kind::kUndecidedCap;
  v.reason = "cap_exceeded";
  return v;
}

namespace {

// Projective canonical form: scale by the inverse of the first entry that is
// invertible in the algebra.  Matrices in the same projective class (by the
// cross-multiplication test) produce identical keys; see the closure logic
// for the rare no-invertible-entry fallback.
std::optional<std::string> projective_canon_key(const Mat2& m) {
  for (int i = 0; i < 4; ++i) {
    const Ext& e = m.at(i / 2, i % 2);
    if (e.is_zero() || e.norm().is_zero()) continue;
    return m.scaled(e.inverse()).key();
  }
  return std::nullopt;
}

}  // namespace

Closure group_closure(const std::vector<Mat2>& gens, unsigned long cap, bool projective) {
  if (gens.empty()) fail("group closure needs at least one generator");
  std::vector<Mat2> edge;
  for (const Mat2& g : gens) edge.push_back(g);
  for (const Mat2& g : gens) edge.push_back(g.inverse());

  std::vector<ClosureElement> elems;
  std::unordered_map<std::string, size_t> index;
  std::vector<size_t> unkeyed;  // projective elements lacking a canonical key

  auto find_or_insert = [&](const Mat2& m, unsigned long generation) -> bool {
    std::optional<std::string> key = projective ? projective_canon_key(m)
                                                : std::optional<std::string>(m.key());
    if (key) {
      auto it = index.find(*key);
      if (it != index.end()) return false;
      // A keyed element can still coincide with an unkeyed one.
      if (projective)
        for (size_t u : unkeyed)
          if (projective_equal(elems[u].m, m)) return false;
      index.emplace(*key, elems.size());
      elems.push_back({m, generation, *key});
      return true;
    }
    for (const ClosureElement& e : elems)
      if (projective_equal(e.m, m)) return false;
    unkeyed.push_back(elems.size());
    elems.push_back({m, generation, "~" + m.key()});
    return true;
  };

  unsigned long n0 = gens[0].conductor();
  Mat2 id(Ext::one(n0, gens[0].at(0, 0).radicand()), Ext::zero(n0, gens[0].at(0, 0).radicand()),
          Ext::zero(n0, gens[0].at(0, 0).radicand()), Ext::one(n0, gens[0].at(0, 0).radicand()));
  find_or_insert(id, 0);

  size_t next = 0;
  bool complete = true;
  while (next < elems.size()) {
    if (elems.size() > cap) {
      complete = false;
      break;
    }
    Mat2 cur = elems[next].m;  // copy: elems may reallocate below
    unsigned long generation = elems[next].generation;
    ++next;
    for (const Mat2& g : edge) {
      Mat2 prod = cur * g;
      find_or_insert(prod, generation + 1);
      if (elems.size() > cap) break;
    }
  }
  if (elems.size() > cap) complete = false;

  std::sort(elems.begin(), elems.end(), [](const ClosureElement& a, const ClosureElement& b) {
    if (a.generation != b.generation) return a.generation < b.generation;
    return a.canon_key < b.canon_key;
  });
  return Closure{std::move(elems), complete, cap};
}

std::string group_id_name(GroupId id) {
  switch (id) {
    case GroupId::kCyclic: return "cyclic";
    case GroupId::kKlein4: return "klein_four";
    case GroupId::kDihedral: return "dihedral";
    case GroupId::kA4: return "alternating_4";
    case GroupId::kS4: return "symmetric_4";
    case GroupId::kA5: return "alternating_5";
    case GroupId::kIndeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

// Fast projective-class lookup inside a completed closure, backed by the
// canonical keys (with a linear fallback for keyless elements).
struct ClassIndexer {
  const std::vector<ClosureElement>& elems;
  std::unordered_map<std::string, size_t> by_key;

  explicit ClassIndexer(const std::vector<ClosureElement>& e) : elems(e) {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i].canon_key.rfind('~', 0) != 0) by_key.emplace(elems[i].canon_key, i);
  }

  size_t find(const Mat2& m) const {
    std::optional<std::string> key = projective_canon_key(m);
    if (key) {
      auto it = by_key.find(*key);
      if (it != by_key.end()) return it->second;
    }
    for (size_t i = 0; i < elems.size(); ++i)
      if (projective_equal(elems[i].m, m)) return i;
    return static_cast<size_t>(-1);
  }
};

// Does the pair (a, b) generate the whole closure projectively?
bool pair_generates(const ClassIndexer& idx, size_t ia, size_t ib) {
  const auto& elems = idx.elems;
  std::vector<char> seen(elems.size(), 0);
  std::vector<size_t> stack;
  auto push = [&](size_t i) {
    if (!seen[i]) {
      seen[i] = 1;
      stack.push_back(i);
    }
  };
  size_t id_idx = static_cast<size_t>(-1);
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i].m.is_scalar()) { id_idx = i; break; }
  if (id_idx == static_cast<size_t>(-1)) return false;
  push(id_idx);
  const Mat2 gens[4] = {elems[ia].m, elems[ib].m, elems[ia].m.inverse(), elems[ib].m.inverse()};
  while (!stack.empty()) {
    size_t cur = stack.back();
    stack.pop_back();
    for (const Mat2& g : gens) {
      size_t nxt = idx.find(elems[cur].m * g);
      if (nxt == static_cast<size_t>(-1)) return false;
      push(nxt);
    }
  }
  for (char c : seen)
    if (!c) return false;
  return true;
}

// Searches for (a, b) with the given projective orders such that ord(ab) is
// `ord_ab` and the pair generates; preferred indices are tried first.
std::optional<PresentationWitness> find_presentation(
    const ClassIndexer& idx, const std::vector<unsigned long>& orders, unsigned long ord_a,
    unsigned long ord_b, unsigned long ord_ab, const std::string& label,
    const std::vector<std::pair<size_t, size_t>>& preferred) {
  const auto& elems = idx.elems;
  auto try_pair = [&](size_t i, size_t j) -> bool {
    if (orders[i] != ord_a || orders[j] != ord_b) return false;
    size_t k = idx.find(elems[i].m * elems[j].m);
    if (k == static_cast<size_t>(-1) || orders[k] != ord_ab) return false;
    return pair_generates(idx, i, j);
  };
  for (auto [i, j] : preferred)
    if (i < elems.size() && j < elems.size() && try_pair(i, j))
      return PresentationWitness{label, i, j, true};
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j)
      if (try_pair(i, j)) return PresentationWitness{label, i, j, true};
  return std::nullopt;
}

}  // namespace

ClassifyReport classify_group(const std::vector<Mat2>& gens, unsigned long closure_cap,
                              unsigned long power_cap) {
  ClassifyReport rep;
  rep.closure = group_closure(gens, closure_cap, /*projective=*/true);
  rep.closure_complete = rep.closure.complete;
  if (!rep.closure.complete) return rep;  // kIndeterminate
  const auto& elems = rep.closure.elements;
  unsigned long n = static_cast<unsigned long>(elems.size());
  rep.group_order = n;

  std::vector<unsigned long> orders(elems.size(), 0);
  for (size_t i = 0; i < elems.size(); ++i) {
    OrderVerdict v = projective_order(elems[i].m, power_cap);
    if (!v.finite()) return rep;  // closed finite set must have finite orders
    orders[i] = v.order;
    ++rep.element_order_histogram[v.order];
  }
  unsigned long max_order = *std::max_element(orders.begin(), orders.end());

  bool abelian = true;
  for (size_t i = 0; i < elems.size() && abelian; ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (!projective_equal(elems[i].m * elems[j].m, elems[j].m * elems[i].m)) {
        abelian = false;
        break;
      }

  if (abelian) {
    if (max_order == n) {
      rep.id = GroupId::kCyclic;
      rep.parameter = n;
    } else if (n == 4 && max_order == 2) {
      // The only non-cyclic abelian subgroup of PGL(2) is the Klein group.
      rep.id = GroupId::kKlein4;
      rep.parameter = 4;
    }
    return rep;
  }

  // Non-abelian cases, by order and structure.
  ClassIndexer indexer(elems);
  std::vector<std::pair<size_t, size_t>> preferred;
  if (gens.size() >= 2) {
    // Natural generator pairs first: (m1, m1^-1 m2) and (m1 m2^-1 m1,
    // m1^-1 m2), located inside the sorted closure by projective lookup.
    size_t im1 = indexer.find(gens[0]);
    size_t im12 = indexer.find(gens[0].inverse() * gens[1]);
    size_t imw = indexer.find(gens[0] * gens[1].inverse() * gens[0]);
    if (im1 != static_cast<size_t>(-1) && im12 != static_cast<size_t>(-1))
      preferred.push_back({im1, im12});
    if (imw != static_cast<size_t>(-1) && im12 != static_cast<size_t>(-1))
      preferred.push_back({imw, im12});
  }

  if (n == 12 && max_order == 3) {
    auto w = find_presentation(indexer, orders, 3, 2, 3, "a^3 = b^2 = (ab)^3 = 1", preferred);
    if (w) {
      rep.id = GroupId::kA4;
      rep.witness = w;
      return rep;
    }
  }
  if (n == 60) {
    auto w = find_presentation(indexer, orders, 2, 3, 5, "a^2 = b^3 = (ab)^5 = 1", preferred);
    if (w) {
      rep.id = GroupId::kA5;
      rep.witness = w;
      return rep;
    }
  }
  if (n == 24 && max_order == 4) {
    // Order 24 with elements of order at most 4 and a non-abelian structure:
    // the symmetric group on four letters (a dihedral group of order 24
    // would contain an element of order 12).
    rep.id = GroupId::kS4;
    return rep;
  }
  if (n % 2 == 0 && max_order == n / 2) {
    // Dihedral: a cyclic subgroup of index 2 inverted by an involution.
    for (size_t r = 0; r < elems.size(); ++r) {
      if (orders[r] != n / 2) continue;
      Mat2 rinv = elems[r].m.inverse();
      for (size_t s = 0; s < elems.size(); ++s) {
        if (orders[s] != 2) continue;
        Mat2 conj = elems[s].m * elems[r].m * elems[s].m.inverse();
        if (projective_equal(conj, rinv)) {
          rep.id = GroupId::kDihedral;
          rep.parameter = n / 2;
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace monodromy
