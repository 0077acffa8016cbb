#include <doctest.h>

#include "monodromy/words.hpp"

using namespace monodromy;

TEST_CASE("parsing") {
  Word w = Word::parse(Alphabet::kBraid, "g1^2 g2^-1 g1");
  CHECK(w.letters().size() == 3);
  CHECK(w.letters()[0].gen == 1);
  CHECK(w.letters()[0].exp == 2);
  CHECK(w.letters()[1].exp == -1);
  CHECK(w.str() == "g1^2 g2^-1 g1");

  CHECK(Word::parse(Alphabet::kBraid, "").empty());
  CHECK(Word::parse(Alphabet::kBraid, "   ").empty());
  CHECK(Word::parse(Alphabet::kSigma, "s3").letters()[0].gen == 3);
  CHECK(Word::parse(Alphabet::kXi, "x2^4").letters()[0].exp == 4);
  // Zero exponents reduce away.
  CHECK(Word::parse(Alphabet::kBraid, "g1^0").empty());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(Word::parse(Alphabet::kBraid, "g3"), ParseError&);
  CHECK_THROWS_AS(Word::parse(Alphabet::kBraid, "s1"), ParseError&);
  CHECK_THROWS_AS(Word::parse(Alphabet::kSigma, "s4"), ParseError&);
  CHECK_THROWS_AS(Word::parse(Alphabet::kBraid, "g"), ParseError&);
  CHECK_THROWS_AS(Word::parse(Alphabet::kBraid, "g1^"), ParseError&);
  CHECK_THROWS_AS(Word::parse(Alphabet::kBraid, "g1^x"), ParseError&);
  CHECK_THROWS_AS(Word::parse(Alphabet::kBraid, "hello"), ParseError&);
  try {
    Word::parse(Alphabet::kBraid, "g1 g9");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}

TEST_CASE("free reduction") {
  CHECK(Word::parse(Alphabet::kBraid, "g1 g1^-1").empty());
  CHECK(Word::parse(Alphabet::kBraid, "g1 g1").str() == "g1^2");
  CHECK(Word::parse(Alphabet::kBraid, "g1 g2 g2^-1 g1^-1").empty());
  Word w = Word::parse(Alphabet::kBraid, "g1^2 g1^-1");
  CHECK(w.str() == "g1");

  Word u = Word::parse(Alphabet::kSigma, "s1 s2^3");
  CHECK((u * u.inverse()).empty());
  CHECK(u.inverse().str() == "s2^-3 s1^-1");
  CHECK(u.exponent_sum() == 4);
  CHECK(u.inverse().exponent_sum() == -4);
}

TEST_CASE("sigma-to-braid substitution") {
  // s1 -> g2 g1^2 g2^-1, s2 -> g2^2, s3 -> g2 g1^-2 g2^-3.
  CHECK(psi_map(Word::parse(Alphabet::kSigma, "s1")).str() == "g2 g1^2 g2^-1");
  CHECK(psi_map(Word::parse(Alphabet::kSigma, "s2")).str() == "g2^2");
  CHECK(psi_map(Word::parse(Alphabet::kSigma, "s3")).str() == "g2 g1^-2 g2^-3");
  // Boundary relation: s3 s2 s1 collapses freely to the empty word.
  CHECK(psi_map(Word::parse(Alphabet::kSigma, "s3 s2 s1")).empty());
  // Control: s3 s2 does not.
  CHECK(psi_map(Word::parse(Alphabet::kSigma, "s3 s2")).str() == "g2 g1^-2 g2^-1");
  // Inverse letters via conjugate powers.
  CHECK(psi_map(Word::parse(Alphabet::kSigma, "s1^-1")).str() == "g2 g1^-2 g2^-1");
  CHECK(psi_map(Word::parse(Alphabet::kSigma, "s1^2")).str() == "g2 g1^4 g2^-1");
}

TEST_CASE("substitutions are homomorphisms") {
  Word u = Word::parse(Alphabet::kSigma, "s1^-1 s2");
  Word v = Word::parse(Alphabet::kSigma, "s2 s3^2");
  CHECK(psi_map(u * v) == psi_map(u) * psi_map(v));
  CHECK(psi_map(u.inverse()) == psi_map(u).inverse());

  Word a = Word::parse(Alphabet::kXi, "x3 x1");
  Word b = Word::parse(Alphabet::kXi, "x2^-1");
  CHECK(phi_map(a * b) == phi_map(a) * phi_map(b));
  CHECK(phi_map(a.inverse()) == phi_map(a).inverse());
}

TEST_CASE("xi-to-sigma substitution") {
  // x1 -> s1^2, x2 -> s2^2, x3 -> s2^-1 s1^-1.
  CHECK(phi_map(Word::parse(Alphabet::kXi, "x1")).str() == "s1^2");
  CHECK(phi_map(Word::parse(Alphabet::kXi, "x2")).str() == "s2^2");
  CHECK(phi_map(Word::parse(Alphabet::kXi, "x3")).str() == "s2^-1 s1^-1");
  // The distinguished five-point loop: x3 x1 -> s2^-1 s1.
  Word sigma = phi_map(Word::parse(Alphabet::kXi, "x3 x1"));
  CHECK(sigma == Word::parse(Alphabet::kSigma, "s2^-1 s1"));
}

TEST_CASE("alphabet bookkeeping") {
  CHECK(alphabet_size(Alphabet::kBraid) == 2);
  CHECK(alphabet_size(Alphabet::kSigma) == 3);
  CHECK(alphabet_size(Alphabet::kXi) == 3);
  CHECK(gen_name(Alphabet::kBraid, 2) == "g2");
  CHECK(gen_name(Alphabet::kXi, 1) == "x1");
  CHECK(Word(Alphabet::kBraid).str() == "1");
}
