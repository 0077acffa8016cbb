// Words in free generators with exponents, free reduction, and the two
// substitution homomorphisms used throughout: sigma-words (three strand
// half-twists) rewrite into braid-words (g1, g2), and xi-words (boundary
// loops of the four-punctured sphere) rewrite into sigma-words.
#ifndef MONODROMY_WORDS_HPP_
#define MONODROMY_WORDS_HPP_

#include <string>
#include <vector>

#include "monodromy/common.hpp"

namespace monodromy {

enum class Alphabet { kBraid, kSigma, kXi };

int alphabet_size(Alphabet a);
std::string alphabet_name(Alphabet a);
std::string gen_name(Alphabet a, int gen);  // 1-based generator index

struct Letter {
  int gen;   // 1-based
  long exp;  // nonzero after reduction
  bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};

class Word {
 public:
  explicit Word(Alphabet a) : alpha_(a) {}
  Word(Alphabet a, std::vector<Letter> letters);

  // Parses tokens like "g1^2 g2^-1 g1"; whitespace-separated; the exponent
  // suffix is optional.  Errors carry the 1-based character position.
  static Word parse(Alphabet a, const std::string& text);

  Alphabet alphabet() const { return alpha_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  // Sum of exponents (the image under the abelianization to Z).
  long exponent_sum() const;

  Word inverse() const;
  Word operator*(const Word& o) const;  // concatenate and freely reduce
  bool operator==(const Word& o) const {
    return alpha_ == o.alpha_ && letters_ == o.letters_;
  }

  std::string str() const;

 private:
  void reduce();

  Alphabet alpha_;
  std::vector<Letter> letters_;
};

// sigma_1 -> g2 g1^2 g2^-1,  sigma_2 -> g2^2,  sigma_3 -> g2 g1^-2 g2^-3.
// (sigma_3 is shorthand for sigma_1^-1 sigma_2^-1, so sigma_3 sigma_2 sigma_1
// reduces freely to the empty word.)
Word psi_map(const Word& sigma_word);

// xi_1 -> sigma_1^2,  xi_2 -> sigma_2^2,  xi_3 -> sigma_2^-1 sigma_1^-1.
Word phi_map(const Word& xi_word);

}  // namespace monodromy

#endif  // MONODROMY_WORDS_HPP_
