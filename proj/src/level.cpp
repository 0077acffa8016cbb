#include "monodromy/level.hpp"

#include <map>
#include <mutex>

namespace monodromy {

namespace {

unsigned long session_conductor(long l) {
  if (l < 1) fail("level must be >= 1");
  return 8ul * static_cast<unsigned long>(l + 2);
}

}  // namespace

LevelContext::LevelContext(long l)
    : level(l),
      conductor(session_conductor(l)),
      q(Cyc::root(conductor, 8)),
      q_inv(Cyc::root(conductor, -8)),
      q_quarter(Cyc::root(conductor, 2)),
      q_quarter_inv(Cyc::root(conductor, -2)),
      radicand(q * (Cyc::one(conductor) + q + q * q)),
      // The radicand q(1 + q + q^2) vanishes exactly when q is a primitive
      // cube root of unity, i.e. at level 1.  There t is the square root of
      // zero and is represented by the exact value 0 (see the header note).
      t(radicand.is_zero() ? Ext::zero(conductor, radicand) : Ext::sqrt_gen(radicand)) {}

std::shared_ptr<const LevelContext> LevelContext::get(long l) {
  static std::map<long, std::shared_ptr<const LevelContext>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(l);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const LevelContext>(l);
  cache.emplace(l, ctx);
  return ctx;
}

}  // namespace monodromy
