#include "monodromy/minimal_poly.hpp"

#include <numeric>
#include <unordered_set>

namespace monodromy {

std::vector<std::pair<unsigned long, Cyc>> galois_conjugates(const Cyc& x) {
  unsigned long n = x.conductor();
  std::vector<std::pair<unsigned long, Cyc>> out;
  for (unsigned long k = 1; k < n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    out.emplace_back(k, x.galois(static_cast<long>(k)));
  }
  if (n == 1) out.emplace_back(1, x);
  return out;
}

namespace {

std::vector<Cyc> distinct_conjugates(const Cyc& x) {
  std::vector<Cyc> values;
  std::unordered_set<std::string> seen;
  for (auto& [k, y] : galois_conjugates(x)) {
    (void)k;
    if (seen.insert(y.key()).second) values.push_back(std::move(y));
  }
  return values;
}

}  // namespace

RatPoly minimal_polynomial(const Cyc& x) {
  std::vector<Cyc> roots = distinct_conjugates(x);
  unsigned long n = x.conductor();
  // Product of (X - root) with coefficients in the field; the result is
  // Galois-stable, hence rational.
  std::vector<Cyc> poly{Cyc::one(n)};
  for (const Cyc& r : roots) {
    std::vector<Cyc> next(poly.size() + 1, Cyc::zero(n));
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * r;
    }
    poly = std::move(next);
  }
  std::vector<Rat> coeffs(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) {
    auto r = poly[i].as_rational();
    if (!r) fail_consistency("orbit product has a non-rational coefficient");
    coeffs[i] = *r;
  }
  RatPoly m{std::move(coeffs)};
  if (!eval_poly(m, x).is_zero())
    fail_consistency("minimal polynomial does not vanish at its element");
  return m;
}

RatPoly minimal_polynomial(const Ext& x) {
  if (x.is_cyclotomic()) return minimal_polynomial(x.u());
  // First linear dependence among 1, x, x^2, ... over Q.  Powers are vectors
  // of length 2*phi(N) (u- and v-components); incremental Gaussian
  // elimination with row bookkeeping recovers the dependence coefficients.
  unsigned long n = x.conductor();
  size_t dim = 2 * euler_phi(n);
  // Echelon rows plus, for each, the polynomial that produced it.
  std::vector<std::vector<Rat>> rows;
  std::vector<std::vector<Rat>> row_polys;
  std::vector<size_t> pivot_cols;
  Ext power = Ext::one(n, x.radicand());
  for (size_t deg = 0; deg <= dim; ++deg) {
    std::vector<Rat> vec(dim, Rat(0));
    for (size_t i = 0; i < power.u().coeffs().size(); ++i) vec[i] = power.u().coeffs()[i];
    for (size_t i = 0; i < power.v().coeffs().size(); ++i)
      vec[dim / 2 + i] = power.v().coeffs()[i];
    std::vector<Rat> combo(deg + 1, Rat(0));
    combo[deg] = 1;
    // Reduce vec against the echelon basis, tracking the combination.
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rat& c = vec[pivot_cols[r]];
      if (c == 0) continue;
      Rat factor = c;  // pivots are normalized to 1
      for (size_t j = 0; j < dim; ++j)
        if (rows[r][j] != 0) vec[j] -= factor * rows[r][j];
      for (size_t j = 0; j < row_polys[r].size() && j < combo.size(); ++j)
        if (row_polys[r][j] != 0) combo[j] -= factor * row_polys[r][j];
    }
    size_t piv = dim;
    for (size_t j = 0; j < dim; ++j)
      if (vec[j] != 0) { piv = j; break; }
    if (piv == dim) {
      // Dependence found: combo gives the vanishing polynomial of degree deg.
      RatPoly m = RatPoly(std::move(combo)).monic();
      if (!eval_poly(m, x).is_zero())
        fail_consistency("vanishing polynomial fails exact substitution");
      return m;
    }
    Rat inv = Rat(1) / vec[piv];
    for (Rat& a : vec)
      if (a != 0) a *= inv;
    for (Rat& a : combo)
      if (a != 0) a *= inv;
    rows.push_back(std::move(vec));
    row_polys.push_back(std::move(combo));
    pivot_cols.push_back(piv);
    power *= x;
  }
  fail_consistency("no linear dependence among powers up to the algebra dimension");
}

Ext eval_poly(const RatPoly& p, const Ext& x) {
  Ext acc = Ext::zero(x.conductor(), x.radicand());
  for (size_t i = p.coeffs().size(); i-- > 0;) {
    acc *= x;
    if (p[i] != 0) acc += Ext(Cyc::from_rat(x.conductor(), p[i]), x.radicand());
  }
  return acc;
}

Cyc eval_poly(const RatPoly& p, const Cyc& x) {
  Cyc acc = Cyc::zero(x.conductor());
  for (size_t i = p.coeffs().size(); i-- > 0;) {
    acc *= x;
    if (p[i] != 0) acc += Cyc::from_rat(x.conductor(), p[i]);
  }
  return acc;
}

std::optional<unsigned long> root_of_unity_order(const Cyc& x) {
  unsigned long n = x.conductor();
  // Roots of unity in Q(zeta_N) are exactly (+/-) zeta_N^j.
  for (unsigned long j = 0; j < n; ++j) {
    Cyc m = Cyc::root(n, static_cast<long>(j));
    bool neg;
    if (x == m) neg = false;
    else if (x == -m) neg = true;
    else continue;
    unsigned long r = n / std::gcd(n, j);  // order of zeta^j
    if (!neg) return r;
    // Order of -u for u of order r: 2r if r odd, r/2 if r = 2 mod 4, r if 4 | r.
    if (r % 2 == 1) return 2 * r;
    if (r % 4 == 2) return r / 2;
    return r;
  }
  return std::nullopt;
}

std::vector<unsigned long> totient_preimage(unsigned long d) {
  if (d == 0) return {};
  std::vector<unsigned long> out;
  // phi(m) >= sqrt(m/2) for all m, so phi(m) = d forces m <= 2 d^2 + 1.
  unsigned long bound = 2 * d * d + 1;
  for (unsigned long m = 1; m <= bound; ++m)
    if (euler_phi(m) == d) out.push_back(m);
  return out;
}

}  // namespace monodromy
