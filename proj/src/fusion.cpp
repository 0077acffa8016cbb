#include "monodromy/fusion.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "monodromy/cyclotomic.hpp"

namespace monodromy {

std::vector<long> fusion_product(long a, long b, long level) {
  if (level < 1) fail_parse("level must be >= 1");
  if (a < 0 || a > level || b < 0 || b > level)
    fail_parse("fusion weight out of range 0..level");
  std::vector<long> out;
  long lo = std::abs(a - b);
  long hi = std::min(a + b, 2 * level - a - b);
  for (long c = lo; c <= hi; c += 2) out.push_back(c);
  return out;
}

namespace {

using Vec = std::vector<std::uint64_t>;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s;
  if (__builtin_add_overflow(a, b, &s)) fail("conformal-block count overflows 64 bits");
  return s;
}

// v -> N_w v  (N_w is symmetric 0/1, so rows and columns agree).
Vec apply_fusion_matrix(const Vec& v, long w, long level) {
  Vec out(v.size(), 0);
  for (long c = 0; c <= level; ++c) {
    if (v[static_cast<size_t>(c)] == 0) continue;
    for (long d : fusion_product(c, w, level))
      out[static_cast<size_t>(d)] =
          checked_add(out[static_cast<size_t>(d)], v[static_cast<size_t>(c)]);
  }
  return out;
}

// v -> H v with H = sum_m N_m^2 (attach one handle).
Vec apply_handle(const Vec& v, long level) {
  Vec out(v.size(), 0);
  for (long m = 0; m <= level; ++m) {
    Vec t = apply_fusion_matrix(apply_fusion_matrix(v, m, level), m, level);
    for (size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], t[i]);
  }
  return out;
}

void validate(const BlockSpec& spec) {
  if (spec.level < 1) fail_parse("level must be >= 1");
  for (long w : spec.weights)
    if (w < 0 || w > spec.level) fail_parse("fusion weight out of range 0..level");
}

}  // namespace

std::uint64_t block_dimension(const BlockSpec& spec) {
  validate(spec);
  Vec start(static_cast<size_t>(spec.level + 1), 0);
  start[0] = 1;
  // Handles attached after the marked points...
  Vec v = start;
  for (long w : spec.weights) v = apply_fusion_matrix(v, w, spec.level);
  for (unsigned g = 0; g < spec.genus; ++g) v = apply_handle(v, spec.level);
  std::uint64_t late = v[0];
  // ...and before them; the transfer matrices commute, so both labelings of
  // the caterpillar give the same count.  Cross-checked on every call.
  Vec u = start;
  for (unsigned g = 0; g < spec.genus; ++g) u = apply_handle(u, spec.level);
  for (long w : spec.weights) u = apply_fusion_matrix(u, w, spec.level);
  if (u[0] != late) fail_consistency("caterpillar decompositions disagree");
  return late;
}

namespace {

// Cached exact sine-character table at conductor 4(l+2):
// shat[j][p] = zeta^{2jp} - zeta^{-2jp}, and the inverses of shat[1][p].
struct CharTable {
  unsigned long conductor;
  std::vector<std::vector<Cyc>> shat;     // [j][p], j,p in 1..l+1
  std::vector<Cyc> s1_inv;                // inverse of shat[1][p]

  explicit CharTable(long level) {
    unsigned long m = static_cast<unsigned long>(level + 2);
    conductor = 4 * m;
    size_t rank = static_cast<size_t>(level + 1);
    shat.assign(rank + 1, {});
    for (size_t j = 1; j <= rank; ++j) {
      shat[j].assign(rank + 1, Cyc::zero(conductor));
      for (size_t p = 1; p <= rank; ++p) {
        long e = static_cast<long>(2 * j * p);
        shat[j][p] = Cyc::root(conductor, e) - Cyc::root(conductor, -e);
      }
    }
    s1_inv.assign(rank + 1, Cyc::zero(conductor));
    for (size_t p = 1; p <= rank; ++p) s1_inv[p] = shat[1][p].inverse();
  }

  static std::shared_ptr<const CharTable> get(long level) {
    static std::map<long, std::shared_ptr<const CharTable>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(level);
    if (it != cache.end()) return it->second;
    auto t = std::make_shared<const CharTable>(level);
    cache.emplace(level, t);
    return t;
  }
};

}  // namespace

std::uint64_t verlinde_dimension(const BlockSpec& spec) {
  validate(spec);
  auto table = CharTable::get(spec.level);
  unsigned long nc = table->conductor;
  long m = spec.level + 2;
  long n = static_cast<long>(spec.weights.size());
  long e1 = 2 - 2 * static_cast<long>(spec.genus) - n;  // exponent of shat(1,p)

  Cyc sum = Cyc::zero(nc);
  for (long p = 1; p <= spec.level + 1; ++p) {
    Cyc term = Cyc::one(nc);
    for (long w : spec.weights)
      term *= table->shat[static_cast<size_t>(w + 1)][static_cast<size_t>(p)];
    const Cyc& base = e1 >= 0 ? table->shat[1][static_cast<size_t>(p)]
                              : table->s1_inv[static_cast<size_t>(p)];
    long reps = e1 >= 0 ? e1 : -e1;
    for (long r = 0; r < reps; ++r) term *= base;
    sum += term;
  }
  // Rational prefactor (2/m)^(1-g) * (-4)^(g-1); the power of 2i that
  // converts the scaled characters back to sines is rational because the
  // exponent 2g-2 is even.
  Rat factor(1);
  long g = static_cast<long>(spec.genus);
  for (long i = 0; i < (g >= 1 ? g - 1 : 1 - g); ++i)
    factor *= (g >= 1) ? rat_of(m, 2) : rat_of(2, m);
  factor.canonicalize();
  Rat neg4 = g >= 1 ? Rat(-4) : Rat(-1, 4);
  for (long i = 0; i < (g >= 1 ? g - 1 : 1 - g); ++i) factor *= neg4;
  Cyc result = sum.scaled(factor);
  auto r = result.as_rational();
  if (!r || !rat_is_integer(*r) || *r < 0)
    fail_consistency("character sum is not a nonnegative integer");
  if (!mpz_fits_ulong_p(r->get_num().get_mpz_t()))
    fail("conformal-block count overflows the machine word");
  return static_cast<std::uint64_t>(r->get_num().get_ui());
}

}  // namespace monodromy
