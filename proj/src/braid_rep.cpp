#include "monodromy/braid_rep.hpp"

#include <sstream>

namespace monodromy {

Mat2::Mat2(Ext a, Ext b, Ext c, Ext d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (int i = 1; i < 4; ++i)
    if (e_[0].conductor() != e_[static_cast<size_t>(i)].conductor() ||
        !(e_[0].radicand() == e_[static_cast<size_t>(i)].radicand()))
      fail("matrix entries live in different algebras");
}

Mat2 Mat2::identity(const LevelContext& ctx) {
  return Mat2(ctx.ext_one(), ctx.ext_zero(), ctx.ext_zero(), ctx.ext_one());
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2(e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
              e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]);
}

Mat2 Mat2::inverse() const {
  Ext d = det();
  Ext dinv = d.inverse();  // fails if the norm of det vanishes
  return Mat2(e_[3] * dinv, -(e_[1] * dinv), -(e_[2] * dinv), e_[0] * dinv);
}

Mat2 Mat2::pow(long e) const {
  unsigned long n = e_[0].conductor();
  Mat2 acc(Ext::one(n, e_[0].radicand()), Ext::zero(n, e_[0].radicand()),
           Ext::zero(n, e_[0].radicand()), Ext::one(n, e_[0].radicand()));
  if (e == 0) return acc;
  Mat2 base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Mat2 Mat2::scaled(const Ext& s) const {
  return Mat2(e_[0] * s, e_[1] * s, e_[2] * s, e_[3] * s);
}

std::optional<Ext> Mat2::scalar_value() const {
  if (!is_scalar()) return std::nullopt;
  return e_[0];
}

std::string Mat2::key() const {
  std::ostringstream os;
  for (const Ext& x : e_) os << x.key() << ';';
  return os.str();
}

Mat2 tk_generator(const LevelContext& ctx, int which) {
  unsigned long n = ctx.conductor;
  Cyc q34_inv = Cyc::root(n, -6);  // q^(-3/4)
  if (which == 1) {
    // diag(q^(1/4), -q^(-3/4))
    return Mat2(ctx.embed(Cyc::root(n, 2)), ctx.ext_zero(), ctx.ext_zero(),
                ctx.embed(-q34_inv));
  }
  if (which != 2) fail("braid generator index must be 1 or 2");
  Cyc s = q34_inv * (Cyc::one(n) + ctx.q).inverse();
  Ext st = ctx.t.scaled_cyc(s);
  return Mat2(ctx.embed(-s), st, st, ctx.embed(s * ctx.q * ctx.q));
}

Mat2 eval_braid(const LevelContext& ctx, const Word& braid_word) {
  if (braid_word.alphabet() != Alphabet::kBraid) fail("eval_braid expects a braid word");
  Mat2 acc = Mat2::identity(ctx);
  for (const Letter& l : braid_word.letters()) {
    Mat2 g = tk_generator(ctx, l.gen);
    acc = acc * g.pow(l.exp);
  }
  return acc;
}

Mat2 eval_sigma(const LevelContext& ctx, const Word& sigma_word) {
  return eval_braid(ctx, psi_map(sigma_word));
}

LanternReport lantern_check(const LevelContext& ctx) {
  Word relation = Word::parse(Alphabet::kSigma, "s3 s2 s1");
  Word control = Word::parse(Alphabet::kSigma, "s3 s2");
  LanternReport rep{relation,
                    psi_map(relation),
                    false,
                    false,
                    control,
                    psi_map(control),
                    false,
                    false};
  rep.relation_word_trivial = rep.relation_braid.empty();
  rep.relation_matrix_identity = eval_braid(ctx, rep.relation_braid).is_identity();
  rep.control_matrix_identity = eval_braid(ctx, rep.control_braid).is_identity();
  rep.passed = rep.relation_matrix_identity && !rep.control_matrix_identity;
  return rep;
}

}  // namespace monodromy
