#include "monodromy/modular_rep.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <utility>

#include "monodromy/common.hpp"
#include "monodromy/numeric_eval.hpp"

namespace monodromy {

namespace {

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                          : static_cast<unsigned long>(-(e + 1)) + 1;
  Rat acc(1);
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

}  // namespace

CycMat::CycMat(size_t n, const Cyc& fill) : n_(n), e_(n * n, fill) {
  if (n == 0) fail("empty matrix");
}

CycMat CycMat::identity(size_t n, unsigned long conductor) {
  CycMat m(n, Cyc::zero(conductor));
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyc::one(conductor);
  return m;
}

CycMat CycMat::diagonal(const std::vector<Cyc>& d) {
  if (d.empty()) fail("empty diagonal");
  CycMat m(d.size(), Cyc::zero(d[0].conductor()));
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

CycMat CycMat::operator*(const CycMat& o) const {
  if (n_ != o.n_) fail("matrix size mismatch");
  CycMat r(n_, Cyc::zero(e_[0].conductor()));
  for (size_t i = 0; i < n_; ++i)
    for (size_t k = 0; k < n_; ++k) {
      const Cyc& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < n_; ++j) {
        const Cyc& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

CycMat CycMat::scaled(const Cyc& s) const {
  CycMat r = *this;
  for (auto& x : r.e_) x *= s;
  return r;
}

CycMat CycMat::scaled_rat(const Rat& r) const {
  CycMat m = *this;
  for (auto& x : m.e_) x = x.scaled(r);
  return m;
}

CycMat CycMat::transpose() const {
  CycMat r(n_, e_[0]);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

CycMat CycMat::conj() const {
  CycMat r = *this;
  for (auto& x : r.e_) x = x.conj();
  return r;
}

bool CycMat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

std::string CycMat::key() const {
  std::string s = std::to_string(n_);
  for (const auto& x : e_) {
    s += ';';
    s += x.key();
  }
  return s;
}

bool projective_equal(const CycMat& a, const CycMat& b) {
  if (a.size() != b.size()) return false;
  size_t n = a.size() * a.size();
  const Cyc* pa = &a.at(0, 0);
  const Cyc* pb = &b.at(0, 0);
  size_t first = n;
  for (size_t i = 0; i < n; ++i)
    if (!pa[i].is_zero()) {
      first = i;
      break;
    }
  size_t firstb = n;
  for (size_t i = 0; i < n; ++i)
    if (!pb[i].is_zero()) {
      firstb = i;
      break;
    }
  if (first == n || firstb == n) return first == firstb;
  // Proportionality by a nonzero field scalar forces the first nonzero
  // positions to agree; the anchored cross products then settle the rest.
  if (first != firstb) return false;
  for (size_t i = 0; i < n; ++i)
    if (pa[first] * pb[i] != pb[first] * pa[i]) return false;
  return true;
}

std::string projective_canon_key(const CycMat& m) {
  size_t n = m.size() * m.size();
  const Cyc* p = &m.at(0, 0);
  for (size_t i = 0; i < n; ++i)
    if (!p[i].is_zero()) return m.scaled(p[i].inverse()).key();
  fail_consistency("projective key of the zero matrix");
}

ModularRep build_modular(long level) {
  if (level < 1) fail_parse("level must be positive");
  ModularRep rep;
  rep.level = level;
  unsigned long m = static_cast<unsigned long>(level) + 2;
  unsigned long n = 8 * m;
  rep.conductor = n;
  rep.rank = static_cast<size_t>(level) + 1;

  // sin(pi j k / m) = (zeta_n^{4jk} - zeta_n^{-4jk}) * (-i/2).
  Cyc half_neg_i = Cyc::root(n, -2 * static_cast<long>(m)).scaled(Rat(1, 2));
  CycMat s(rep.rank, Cyc::zero(n));
  for (size_t j = 1; j <= rep.rank; ++j)
    for (size_t k = 1; k <= rep.rank; ++k) {
      long e = 4 * static_cast<long>(j) * static_cast<long>(k);
      s.at(j - 1, k - 1) = (Cyc::root(n, e) - Cyc::root(n, -e)) * half_neg_i;
    }
  rep.s_matrix = s;

  std::vector<Cyc> d;
  d.reserve(rep.rank);
  for (size_t j = 1; j <= rep.rank; ++j)
    d.push_back(Cyc::root(n, 2 * static_cast<long>(j * j) - static_cast<long>(m)));
  rep.t_matrix = CycMat::diagonal(d);

  rep.sqrt_factor = exact_sqrt(2, n) * exact_sqrt(m, n).inverse();
  if (rep.sqrt_factor * rep.sqrt_factor != Cyc::from_rat(n, rat_of(2, static_cast<long>(m))))
    fail_consistency("normalization constant squares incorrectly");
  return rep;
}

Cyc exact_sqrt(unsigned long value, unsigned long conductor) {
  if (conductor % 8 != 0) fail("conductor must be divisible by 8");
  if (value == 0) return Cyc::zero(conductor);
  unsigned long odd = value;
  unsigned long twos = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++twos;
  }
  // sqrt(2) = zeta_8 + zeta_8^{-1}.
  long eighth = static_cast<long>(conductor / 8);
  Cyc root2 = Cyc::root(conductor, eighth) + Cyc::root(conductor, -eighth);
  Cyc result = root2.pow(static_cast<long>(twos));
  if (odd > 1) {
    if (conductor % odd != 0) fail("conductor lacks the needed roots of unity");
    long step = static_cast<long>(conductor / odd);
    // Quadratic Gauss sum: sum_j zeta_odd^{j^2} equals sqrt(odd) for
    // odd = 1 mod 4 and i*sqrt(odd) for odd = 3 mod 4.
    Cyc gauss = Cyc::zero(conductor);
    for (unsigned long j = 0; j < odd; ++j) {
      unsigned long sq = (j * j) % odd;
      gauss += Cyc::root(conductor, step * static_cast<long>(sq));
    }
    if (odd % 4 == 3)
      gauss *= Cyc::root(conductor, -static_cast<long>(conductor / 4));
    result *= gauss;
  }
  if (result * result != Cyc::from_rat(conductor, Rat(value)))
    fail_consistency("Gauss sum square mismatch");
  if (!result.is_real()) fail_consistency("Gauss sum is not real");
  if (sign_decide(result, Rat(0)) == Sign::kLess) result = -result;
  return result;
}

RelationsReport modular_relations_check(const ModularRep& rep) {
  RelationsReport out;
  const CycMat& s = rep.s_matrix;
  const CycMat& t = rep.t_matrix;
  CycMat s2 = s * s;
  CycMat st = s * t;
  CycMat st3 = st * st * st;
  out.s2_matches_st3 = projective_equal(s2, st3);
  out.s4_is_identity =
      projective_equal(s2 * s2, CycMat::identity(rep.rank, rep.conductor));
  out.passed = out.s2_matches_st3 && out.s4_is_identity;
  return out;
}

namespace {

// Entries of x scaled by 2m must have integer coordinates on the power basis.
bool entry_in_lattice(const Cyc& x, unsigned long two_m) {
  for (const Rat& c : x.coeffs())
    if (!rat_is_integer(c * Rat(two_m))) return false;
  return true;
}

bool element_certificate(const CycMat& a, long s_exp, const Cyc& sqrt_factor,
                         unsigned long m) {
  // True element = c^e * a with c = sqrt(2/m); c^2 = 2/m is rational, so
  // c^e = (2/m)^(e/2) times at most one leftover factor of c.
  long q = s_exp >= 0 ? s_exp / 2 : -((-s_exp + 1) / 2);
  long r = s_exp - 2 * q;  // 0 or 1
  CycMat truth = a.scaled_rat(rat_pow(rat_of(2, static_cast<long>(m)), q));
  if (r != 0) truth = truth.scaled(sqrt_factor);
  for (size_t i = 0; i < truth.size(); ++i)
    for (size_t j = 0; j < truth.size(); ++j)
      if (!entry_in_lattice(truth.at(i, j), 2 * m)) return false;
  return true;
}

}  // namespace

ModularImageReport modular_image_finite(const ModularRep& rep,
                                        unsigned long cap) {
  ModularImageReport out;
  out.level = rep.level;
  out.relations = modular_relations_check(rep);

  unsigned long m = static_cast<unsigned long>(rep.level) + 2;
  const CycMat& s = rep.s_matrix;
  const CycMat& t = rep.t_matrix;

  // The sine kernel satisfies s^2 = (m/2) id exactly, which makes the true
  // S = sqrt(2/m) s an involution: its inverse needs no extra BFS edge.
  CycMat id = CycMat::identity(rep.rank, rep.conductor);
  if (s * s != id.scaled_rat(rat_of(static_cast<long>(m), 2)))
    fail_consistency("sine kernel fails the orthogonality identity");

  std::vector<Cyc> tinv_diag;
  for (size_t j = 0; j < rep.rank; ++j)
    tinv_diag.push_back(t.at(j, j).conj());
  CycMat tinv = CycMat::diagonal(tinv_diag);

  struct Edge {
    const CycMat* mat;
    long ds;
  };
  const Edge edges[] = {{&s, 1}, {&t, 0}, {&tinv, 0}};

  std::unordered_map<std::string, size_t> seen;
  std::deque<size_t> queue;
  out.elements.push_back(
      {id, 0, 0, projective_canon_key(id), true});
  seen.emplace(out.elements[0].canon_key, 0);
  queue.push_back(0);

  bool capped = false;
  while (!queue.empty()) {
    size_t cur = queue.front();
    queue.pop_front();
    for (const Edge& e : edges) {
      CycMat next = out.elements[cur].a * *e.mat;
      std::string key = projective_canon_key(next);
      if (seen.count(key)) continue;
      if (out.elements.size() >= cap) {
        capped = true;
        queue.clear();
        break;
      }
      ModularElement el{std::move(next), out.elements[cur].s_exponent + e.ds,
                        out.elements[cur].generation + 1, key, true};
      seen.emplace(el.canon_key, out.elements.size());
      out.elements.push_back(std::move(el));
      queue.push_back(out.elements.size() - 1);
    }
  }

  out.cap_exceeded = capped;
  out.finite = !capped;
  out.order = static_cast<unsigned long>(out.elements.size());

  out.all_certified = true;
  for (auto& el : out.elements) {
    el.certificate_ok =
        element_certificate(el.a, el.s_exponent, rep.sqrt_factor, m);
    if (!el.certificate_ok) out.all_certified = false;
  }

  std::sort(out.elements.begin(), out.elements.end(),
            [](const ModularElement& x, const ModularElement& y) {
              if (x.generation != y.generation)
                return x.generation < y.generation;
              return x.canon_key < y.canon_key;
            });
  return out;
}

Rat unitarity_defect_bound(const ModularRep& rep, unsigned long bits) {
  // The normalized matrix is c * s with c^2 = 2/m rational, so the Gram
  // entries (2/m) * sum_k s_jk conj(s_lk) need no square-root enclosures.
  unsigned long m = static_cast<unsigned long>(rep.level) + 2;
  size_t n = rep.rank;
  std::vector<std::vector<ComplexBox>> box(n, std::vector<ComplexBox>());
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k)
      box[j].push_back(numeric_interval(rep.s_matrix.at(j, k), bits));

  Rat worst(0);
  for (size_t j = 0; j < n; ++j)
    for (size_t l = 0; l < n; ++l) {
      ComplexBox acc(RatInterval::point(Rat(0)), RatInterval::point(Rat(0)));
      for (size_t k = 0; k < n; ++k) acc = acc + box[j][k] * box[l][k].conj();
      acc = acc.scaled(rat_of(2, static_cast<long>(m)));
      if (j == l)
        acc.re = acc.re + RatInterval::point(Rat(-1));
      RatInterval nsq = acc.norm_sq();
      Rat bound = sqrt_enclosure(RatInterval(Rat(0), nsq.hi), bits).hi;
      if (bound > worst) worst = bound;
    }
  return worst;
}

}  // namespace monodromy
