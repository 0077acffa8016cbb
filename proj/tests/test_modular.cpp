#include <doctest.h>

#include <string>
#include <unordered_set>

#include "monodromy/modular_rep.hpp"
#include "monodromy/numeric_eval.hpp"

using namespace monodromy;

TEST_CASE("exact square roots from Gauss sums") {
  for (unsigned long n = 1; n <= 20; ++n) {
    unsigned long nc = 8 * n;
    Cyc s = exact_sqrt(n, nc);
    CHECK(s * s == Cyc::from_rat(nc, Rat(static_cast<long>(n))));
    CHECK(s.is_real());
    CHECK(sign_decide(s, Rat(0)) == Sign::kGreater);
  }
  // Perfect squares come out as plain rationals.
  CHECK(exact_sqrt(1, 8).as_rational() == Rat(1));
  CHECK(exact_sqrt(4, 8).as_rational() == Rat(2));
  CHECK(exact_sqrt(9, 72).as_rational() == Rat(3));
  CHECK(exact_sqrt(16, 8).as_rational() == Rat(4));
  // Numeric enclosure oracle for sqrt(2).
  ComplexBox b = numeric_interval(exact_sqrt(2, 8), 128);
  CHECK(b.re.lo > Rat(141, 100));
  CHECK(b.re.hi < Rat(142, 100));
  CHECK(b.im.lo <= Rat(0));
  CHECK(b.im.hi >= Rat(0));
  // Multiplicativity inside a common field.
  CHECK(exact_sqrt(2, 24) * exact_sqrt(3, 24) == exact_sqrt(6, 24));
  CHECK(exact_sqrt(3, 120) * exact_sqrt(5, 120) == exact_sqrt(15, 120));
  CHECK(exact_sqrt(0, 8).is_zero());
  // Conductor prerequisites.
  CHECK_THROWS_AS(exact_sqrt(2, 12), Error&);
  CHECK_THROWS_AS(exact_sqrt(3, 8), Error&);
}

TEST_CASE("construction and exact orthogonality of the sine kernel") {
  for (long l = 1; l <= 6; ++l) {
    ModularRep rep = build_modular(l);
    unsigned long m = static_cast<unsigned long>(l) + 2;
    CHECK(rep.conductor == 8 * m);
    CHECK(rep.rank == static_cast<size_t>(l) + 1);
    // s^2 = (m/2) id: rows of sines are orthogonal with constant norm.
    CycMat id = CycMat::identity(rep.rank, rep.conductor);
    CHECK(rep.s_matrix * rep.s_matrix ==
          id.scaled_rat(rat_of(static_cast<long>(m), 2)));
    // The tracked normalization squares to 2/m.
    CHECK(rep.sqrt_factor * rep.sqrt_factor ==
          Cyc::from_rat(rep.conductor, rat_of(2, static_cast<long>(m))));
    // The sine kernel is real and symmetric.
    CHECK(rep.s_matrix == rep.s_matrix.transpose());
    CHECK(rep.s_matrix == rep.s_matrix.conj());
  }
  CHECK_THROWS_AS(build_modular(0), ParseError&);
}

TEST_CASE("projective relations of the torus action") {
  for (long l = 1; l <= 6; ++l) {
    RelationsReport r = modular_relations_check(build_modular(l));
    CHECK(r.s2_matches_st3);
    CHECK(r.s4_is_identity);
    CHECK(r.passed);
  }
  // Negative control: a phase on a single twist entry is not scalar and
  // breaks S^2 ~ (ST)^3 while leaving S^4 ~ 1 intact.
  ModularRep rep = build_modular(2);
  rep.t_matrix.at(0, 0) *= Cyc::root(rep.conductor, 1);
  RelationsReport r = modular_relations_check(rep);
  CHECK_FALSE(r.s2_matches_st3);
  CHECK(r.s4_is_identity);
  CHECK_FALSE(r.passed);
}

TEST_CASE("projective matrix equality on larger sizes") {
  ModularRep rep = build_modular(3);
  const CycMat& s = rep.s_matrix;
  CHECK(projective_equal(s, s.scaled(Cyc::root(rep.conductor, 7))));
  CHECK(projective_equal(s, s.scaled_rat(Rat(-5, 3))));
  CHECK_FALSE(projective_equal(s, rep.t_matrix));
  CHECK(projective_canon_key(s) ==
        projective_canon_key(s.scaled(Cyc::root(rep.conductor, 11))));
  // A single-entry change breaks projective equality.
  CycMat mod = s;
  mod.at(1, 2) *= Cyc::root(rep.conductor, 1);
  CHECK_FALSE(projective_equal(s, mod));
}

TEST_CASE("finite closure with certificates at low levels") {
  const unsigned long expected[] = {0, 24, 384, 1440, 2304};
  for (long l = 1; l <= 4; ++l) {
    ModularImageReport rep = modular_image_finite(build_modular(l), 20000);
    CHECK(rep.finite);
    CHECK_FALSE(rep.cap_exceeded);
    CHECK(rep.order == expected[l]);
    CHECK(rep.elements.size() == expected[l]);
    CHECK(rep.all_certified);
    CHECK(rep.relations.passed);
    for (const auto& el : rep.elements) CHECK(el.certificate_ok);
    CHECK(rep.elements[0].generation == 0);
  }
}

TEST_CASE("the level-one closure is closed under products and powers") {
  ModularRep base = build_modular(1);
  ModularImageReport rep = modular_image_finite(base, 20000);
  REQUIRE(rep.order == 24);
  std::unordered_set<std::string> keys;
  for (const auto& el : rep.elements) keys.insert(el.canon_key);
  CHECK(keys.size() == rep.order);

  std::vector<Cyc> tinv_diag;
  for (size_t j = 0; j < base.rank; ++j)
    tinv_diag.push_back(base.t_matrix.at(j, j).conj());
  CycMat tinv = CycMat::diagonal(tinv_diag);
  const CycMat* edges[] = {&base.s_matrix, &base.t_matrix, &tinv};
  for (const auto& el : rep.elements)
    for (const CycMat* g : edges)
      CHECK(keys.count(projective_canon_key(el.a * *g)) == 1);

  // Every element's projective order divides the group order.
  CycMat id = CycMat::identity(base.rank, base.conductor);
  for (const auto& el : rep.elements) {
    CycMat acc = el.a;
    unsigned long ord = 1;
    while (!projective_equal(acc, id) && ord <= 24) {
      acc = acc * el.a;
      ++ord;
    }
    CHECK(24 % ord == 0);
  }
}

TEST_CASE("closure output is deterministic") {
  ModularImageReport a = modular_image_finite(build_modular(2), 20000);
  ModularImageReport b = modular_image_finite(build_modular(2), 20000);
  REQUIRE(a.order == b.order);
  for (size_t i = 0; i < a.elements.size(); ++i) {
    CHECK(a.elements[i].canon_key == b.elements[i].canon_key);
    CHECK(a.elements[i].s_exponent == b.elements[i].s_exponent);
    CHECK(a.elements[i].generation == b.elements[i].generation);
  }
}

TEST_CASE("a non-lattice perturbation is caught by cap and certificate") {
  ModularRep rep = build_modular(1);
  rep.t_matrix.at(0, 0) = rep.t_matrix.at(0, 0).scaled(Rat(1, 5));
  ModularImageReport out = modular_image_finite(rep, 50);
  CHECK(out.cap_exceeded);
  CHECK_FALSE(out.finite);
  CHECK(out.order == 50);
  CHECK_FALSE(out.all_certified);
  bool some_bad = false;
  for (const auto& el : out.elements) some_bad |= !el.certificate_ok;
  CHECK(some_bad);
}

TEST_CASE("certified unitarity defect bounds") {
  for (long l : {1L, 3L, 5L}) {
    ModularRep rep = build_modular(l);
    Rat d128 = unitarity_defect_bound(rep, 128);
    CHECK(d128 >= Rat(0));
    CHECK(rat_abs_le_pow2(d128, 64));
    // Refinement at higher precision only tightens the bound.
    Rat d256 = unitarity_defect_bound(rep, 256);
    CHECK(d256 <= d128);
  }
}
