#include "monodromy/words.hpp"

#include <cctype>
#include <sstream>

namespace monodromy {

int alphabet_size(Alphabet a) { return a == Alphabet::kBraid ? 2 : 3; }

std::string alphabet_name(Alphabet a) {
  switch (a) {
    case Alphabet::kBraid: return "braid";
    case Alphabet::kSigma: return "sigma";
    case Alphabet::kXi: return "xi";
  }
  return "?";
}

std::string gen_name(Alphabet a, int gen) {
  const char* prefix = a == Alphabet::kBraid ? "g" : (a == Alphabet::kSigma ? "s" : "x");
  return prefix + std::to_string(gen);
}

Word::Word(Alphabet a, std::vector<Letter> letters) : alpha_(a), letters_(std::move(letters)) {
  for (const Letter& l : letters_)
    if (l.gen < 1 || l.gen > alphabet_size(alpha_))
      fail("generator index out of range for alphabet");
  reduce();
}

void Word::reduce() {
  std::vector<Letter> out;
  for (const Letter& l : letters_) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  letters_ = std::move(out);
}

long Word::exponent_sum() const {
  long s = 0;
  for (const Letter& l : letters_) s += l.exp;
  return s;
}

Word Word::inverse() const {
  std::vector<Letter> rev;
  rev.reserve(letters_.size());
  for (size_t i = letters_.size(); i-- > 0;) rev.push_back({letters_[i].gen, -letters_[i].exp});
  return Word(alpha_, std::move(rev));
}

Word Word::operator*(const Word& o) const {
  if (alpha_ != o.alpha_) fail("cannot concatenate words over different alphabets");
  std::vector<Letter> cat(letters_);
  cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
  return Word(alpha_, std::move(cat));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << " ";
    os << gen_name(alpha_, letters_[i].gen);
    if (letters_[i].exp != 1) os << "^" << letters_[i].exp;
  }
  return os.str();
}

Word Word::parse(Alphabet a, const std::string& text) {
  const char expected = a == Alphabet::kBraid ? 'g' : (a == Alphabet::kSigma ? 's' : 'x');
  std::vector<Letter> letters;
  size_t i = 0;
  auto err = [&](size_t pos, const std::string& msg) {
    fail_parse("position " + std::to_string(pos + 1) + ": " + msg);
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    size_t start = i;
    char c = text[i];
    if (c != expected)
      err(start, std::string("expected generator '") + expected + "<index>' for the " +
                     alphabet_name(a) + " alphabet, found '" + c + "'");
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      err(start, "generator letter must be followed by an index");
    long gen = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      gen = gen * 10 + (text[i] - '0');
      if (gen > 1000) err(start, "generator index too large");
      ++i;
    }
    if (gen < 1 || gen > alphabet_size(a))
      err(start, "generator " + gen_name(a, static_cast<int>(gen)) + " is not in the " +
                     alphabet_name(a) + " alphabet (1.." + std::to_string(alphabet_size(a)) + ")");
    long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t exp_start = i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        err(exp_start, "exponent must be an integer");
      exp = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        exp = exp * 10 + (text[i] - '0');
        if (exp > 1000000) err(exp_start, "exponent too large");
        ++i;
      }
      if (neg) exp = -exp;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      err(i, std::string("unexpected character '") + text[i] + "' after a letter");
    letters.push_back({static_cast<int>(gen), exp});
  }
  return Word(a, std::move(letters));
}

namespace {

// Substitution images of single generators.
Word sigma_image(int gen) {
  switch (gen) {
    case 1: return Word(Alphabet::kBraid, {{2, 1}, {1, 2}, {2, -1}});
    case 2: return Word(Alphabet::kBraid, {{2, 2}});
    case 3: return Word(Alphabet::kBraid, {{2, 1}, {1, -2}, {2, -3}});
  }
  fail("bad sigma generator");
}

Word xi_image(int gen) {
  switch (gen) {
    case 1: return Word(Alphabet::kSigma, {{1, 2}});
    case 2: return Word(Alphabet::kSigma, {{2, 2}});
    case 3: return Word(Alphabet::kSigma, {{2, -1}, {1, -1}});
  }
  fail("bad xi generator");
}

Word substitute(const Word& w, Alphabet target, Word (*image)(int)) {
  Word out(target);
  for (const Letter& l : w.letters()) {
    Word g = image(l.gen);
    if (l.exp < 0) g = g.inverse();
    long reps = l.exp < 0 ? -l.exp : l.exp;
    for (long r = 0; r < reps; ++r) out = out * g;
  }
  return out;
}

}  // namespace

Word psi_map(const Word& sigma_word) {
  if (sigma_word.alphabet() != Alphabet::kSigma) fail("psi_map expects a sigma-word");
  return substitute(sigma_word, Alphabet::kBraid, sigma_image);
}

Word phi_map(const Word& xi_word) {
  if (xi_word.alphabet() != Alphabet::kXi) fail("phi_map expects a xi-word");
  return substitute(xi_word, Alphabet::kSigma, xi_image);
}

}  // namespace monodromy
