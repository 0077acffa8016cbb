// The level-l two-dimensional braid representation on three strands, with
// exact 2x2 matrices over the session quadratic algebra.  Generator shapes:
//   g1 = q^(-3/4) * [ q  0 ; 0  -1 ]
//   g2 = q^(-3/4)/(q+1) * [ -1  t ; t  q^2 ],   t^2 = q (1 + q + q^2).
// Both satisfy the braid relation and share the characteristic polynomial
// (X - q^(1/4)) (X + q^(-3/4)) and determinant -q^(-1/2).
#ifndef MONODROMY_BRAID_REP_HPP_
#define MONODROMY_BRAID_REP_HPP_

#include <array>
#include <optional>

#include "monodromy/level.hpp"
#include "monodromy/words.hpp"

namespace monodromy {

class Mat2 {
 public:
  Mat2(Ext a, Ext b, Ext c, Ext d);
  static Mat2 identity(const LevelContext& ctx);

  const Ext& at(int r, int c) const { return e_[static_cast<size_t>(2 * r + c)]; }
  unsigned long conductor() const { return e_[0].conductor(); }

  Mat2 operator*(const Mat2& o) const;
  bool operator==(const Mat2& o) const { return e_ == o.e_; }
  bool operator!=(const Mat2& o) const { return !(*this == o); }

  Ext trace() const { return e_[0] + e_[3]; }
  Ext det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  Mat2 inverse() const;  // fails when det is not invertible in the algebra
  Mat2 pow(long e) const;
  Mat2 scaled(const Ext& s) const;

  bool is_scalar() const { return e_[1].is_zero() && e_[2].is_zero() && e_[0] == e_[3]; }
  bool is_identity() const { return is_scalar() && e_[0].is_one(); }
  std::optional<Ext> scalar_value() const;

  std::string key() const;  // canonical serialization (exact equality key)

 private:
  std::array<Ext, 4> e_;  // row-major
};

// The representation of braid generator g1 or g2 (which in {1, 2}).
Mat2 tk_generator(const LevelContext& ctx, int which);

// Exact image of a braid word; empty word maps to the identity.
Mat2 eval_braid(const LevelContext& ctx, const Word& braid_word);

// Convenience: image of a sigma-word via the substitution homomorphism.
Mat2 eval_sigma(const LevelContext& ctx, const Word& sigma_word);

// Exercises the boundary-relation word s3 s2 s1, whose braid image must
// collapse to the identity, and a shorter control word that must not.
struct LanternReport {
  Word relation_sigma;   // s3 s2 s1
  Word relation_braid;   // image under the substitution (freely reduced)
  bool relation_word_trivial;    // the braid word itself is empty
  bool relation_matrix_identity; // exact matrix check
  Word control_sigma;    // s3 s2
  Word control_braid;
  bool control_matrix_identity;  // expected false
  bool passed;  // relation holds and the control does not
};

LanternReport lantern_check(const LevelContext& ctx);

}  // namespace monodromy

#endif  // MONODROMY_BRAID_REP_HPP_
