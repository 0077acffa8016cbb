#include "monodromy/rational_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace monodromy {

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rat& a) {
  RatPoly p;
  if (a != 0) p.c_ = {a};
  return p;
}

RatPoly RatPoly::x() {
  RatPoly p;
  p.c_ = {Rat(0), Rat(1)};
  return p;
}

RatPoly RatPoly::linear(const Rat& root) {
  RatPoly p;
  p.c_ = {-root, Rat(1)};
  return p;
}

const Rat& RatPoly::leading() const {
  if (c_.empty()) fail("leading coefficient of zero polynomial");
  return c_.back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  Rat tmp;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      tmp = c_[i] * o.c_[j];
      r[i + j] += tmp;
    }
  }
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& a : r) a = -a;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled(const Rat& a) const {
  if (a == 0) return RatPoly();
  std::vector<Rat> r(c_);
  for (auto& x : r) x *= a;
  return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) fail("polynomial division by zero");
  if (degree() < d.degree()) return {RatPoly(), *this};
  std::vector<Rat> rem(c_);
  std::vector<Rat> quo(degree() - d.degree() + 1, Rat(0));
  const Rat& lead = d.leading();
  for (long i = degree(); i >= d.degree(); --i) {
    Rat q = rem[i] / lead;
    if (q == 0) continue;
    quo[i - d.degree()] = q;
    for (long j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= q * d.c_[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(r));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) fail("monic() of zero polynomial");
  return scaled(Rat(1) / leading());
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

bool RatPoly::is_monic_integer() const {
  if (is_zero() || leading() != 1) return false;
  for (const Rat& a : c_)
    if (!rat_is_integer(a)) return false;
  return true;
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    first = false;
    Rat a = abs(Rat(c_[i]));
    if (a != 1 || i == 0) os << rat_str(a) << (i > 0 ? "*" : "");
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 1) return p;
  RatPoly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return p.divmod(g).first;
}

namespace {

// Signs along the Sturm chain evaluated at x; counts strict sign changes.
long sign_changes_at(const std::vector<RatPoly>& chain, const Rat& x) {
  long changes = 0;
  int prev = 0;
  for (const RatPoly& p : chain) {
    Rat v = p.eval(x);
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return changes;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero()) {
    RatPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

}  // namespace

long count_real_roots_in(const RatPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) fail("root count of zero polynomial");
  if (cmp(lo, hi) > 0) fail("empty interval in root count");
  RatPoly q = squarefree_part(p);
  if (q.degree() == 0) return 0;
  // The Sturm count covers the half-open interval (lo, hi]; the left endpoint
  // is tested separately so the closed interval [lo, hi] is counted.
  std::vector<RatPoly> chain = sturm_chain(q);
  long n = sign_changes_at(chain, lo) - sign_changes_at(chain, hi);
  if (q.eval(lo) == 0) ++n;
  return n;
}

long count_real_roots(const RatPoly& p) {
  if (p.is_zero()) fail("root count of zero polynomial");
  if (p.degree() == 0) return 0;
  // Cauchy bound: all complex roots lie in |x| <= 1 + max|c_i| / |lead|.
  Rat bound(1);
  for (long i = 0; i < p.degree(); ++i) {
    Rat m = abs(Rat(p[i])) / abs(Rat(p.leading()));
    if (cmp(m, bound) > 0) bound = m;
  }
  bound += 1;
  return count_real_roots_in(p, -bound, bound);
}

namespace {

// Exact division of integer polynomials; divisor must be monic and divide
// the dividend exactly.  Coefficients low-to-high, no trailing zeros.
std::vector<Int> poly_int_divexact(std::vector<Int> rem, const std::vector<Int>& b) {
  if (b.empty() || b.back() != 1) fail("integer division requires monic divisor");
  if (rem.size() < b.size()) fail("bad degrees in exact division");
  size_t db = b.size() - 1;
  std::vector<Int> quo(rem.size() - db, Int(0));
  for (size_t shift = quo.size(); shift-- > 0;) {
    Int q = rem[shift + db];
    if (q != 0) {
      quo[shift] = q;
      for (size_t j = 0; j < b.size(); ++j) rem[shift + j] -= q * b[j];
    }
  }
  for (const Int& r : rem)
    if (r != 0) fail_consistency("inexact cyclotomic division");
  return quo;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned long n) {
  static std::map<unsigned long, std::vector<Int>> cache;
  static std::mutex mu;
  if (n == 0) fail("cyclotomic polynomial needs n >= 1");
  std::lock_guard<std::mutex> lock(mu);
  auto hit = cache.find(n);
  if (hit != cache.end()) return hit->second;
  // Divisors of n in increasing order; every proper divisor of d also divides
  // n and precedes it, so each entry below is computed from cached factors.
  for (unsigned long d : divisors(n)) {
    if (cache.count(d)) continue;
    if (d == 1) {
      cache[1] = {Int(-1), Int(1)};  // X - 1
      continue;
    }
    std::vector<Int> acc(d + 1, Int(0));  // X^d - 1
    acc[0] = -1;
    acc[d] = 1;
    for (unsigned long e : divisors(d))
      if (e != d) acc = poly_int_divexact(std::move(acc), cache.at(e));
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    cache[d] = std::move(acc);
  }
  return cache.at(n);
}

RatPoly cyclotomic_poly_rat(unsigned long n) {
  const std::vector<Int>& z = cyclotomic_polynomial(n);
  std::vector<Rat> c(z.size());
  for (size_t i = 0; i < z.size(); ++i) c[i] = Rat(z[i]);
  return RatPoly(std::move(c));
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace monodromy
