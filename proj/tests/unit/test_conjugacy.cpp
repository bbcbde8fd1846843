#include <doctest.h>

#include "slocc/catalog.hpp"
#include "slocc/conjugacy.hpp"

using namespace slocc;

namespace {

StateVector st(const char* text) { return StateVector::parse(text); }

}  // namespace

TEST_CASE("semisimple pairs are decided by the invariant criterion") {
  ConjugacyVerdict v = g0_conjugate(st("u1"), st("u3"));
  CHECK(v.answer == Answer::yes);
  CHECK(v.route == Route::invariant_criterion);
  CHECK(g0_conjugate(st("u1"), st("2*u1")).answer == Answer::no);
  CHECK(g0_conjugate(st("u1"), st("-u1")).answer == Answer::yes);
}

TEST_CASE("identical states") {
  ConjugacyVerdict v = g0_conjugate(st("e1100 + e0011"), st("e1100 + e0011"));
  CHECK(v.answer == Answer::yes);
  CHECK(v.route == Route::identical);
}

TEST_CASE("nilpotent pairs") {
  ConjugacyVerdict v = g0_conjugate(st("e1100"), st("e1100 + e0000"));
  CHECK(v.answer == Answer::no);
  CHECK(g0_conjugate(st("e1100"), st("e0011")).answer == Answer::yes);
  CHECK(g0_conjugate(st("e1100"), st("e1100 + e1000")).answer == Answer::yes);
}

TEST_CASE("semisimple against nilpotent") {
  ConjugacyVerdict v = g0_conjugate(st("u1"), st("e1100"));
  CHECK(v.answer == Answer::no);
  CHECK(v.route != Route::groebner);
}

TEST_CASE("S-conjugacy") {
  ConjugacyVerdict v = s_conjugate(st("e0011"), st("e1100"));
  CHECK(v.answer == Answer::yes);
  CHECK(s_conjugate(st("u1"), st("2*u1")).answer == Answer::no);
  // Orbits 2..7 are permutations of one another.
  const Catalog& cat = Catalog::instance();
  CHECK(g0_conjugate(cat.nilpotent_orbit(2), cat.nilpotent_orbit(3)).answer == Answer::no);
  ConjugacyVerdict w = s_conjugate(cat.nilpotent_orbit(2), cat.nilpotent_orbit(3));
  REQUIRE(w.answer == Answer::yes);
  REQUIRE(w.permutation.has_value());
  CHECK(g0_conjugate(sym4_act(*w.permutation, cat.nilpotent_orbit(2)), cat.nilpotent_orbit(3)).answer == Answer::yes);
}

TEST_CASE("witnesses reproduce the target") {
  ConjugacyLimits limits;
  limits.want_witness = true;
  for (auto [a, b] : {std::pair{"e1100", "e0011"}, {"e1100", "e1100 + e1000"}, {"u1", "u4"}}) {
    ConjugacyVerdict v = g0_conjugate(st(a), st(b), limits);
    REQUIRE(v.answer == Answer::yes);
    if (v.witness) CHECK(group_act(*v.witness, st(a)) == st(b));
  }
}

TEST_CASE("the conjugacy system vanishes at a known witness") {
  Mat2 a{1, 1, 0, 1}, b{2, 0, 0, GR::ratio(1, 2)}, c{1, 0, -1, 1}, d{0, 1, -1, 0};
  SL2Quad g(a, b, c, d);
  StateVector x = st("e1100 + u2");
  Ideal sys = conjugacy_system(x, group_act(g, x));
  std::vector<GR> point;
  for (const Mat2& m : {a, b, c, d})
    for (const GR& z : {m.a, m.b, m.c, m.d}) point.push_back(z);
  for (const MultiPoly& p : sys.generators()) CHECK(p.eval(point).is_zero());
}

TEST_CASE("prefilter signatures are orbit invariants") {
  StateVector x = st("e1100 + e0101 + e0011");
  SL2Quad g(Mat2{1, 2, 0, 1}, Mat2{1, 0, 3, 1}, Mat2{0, 1, -1, 0}, Mat2{2, 1, 1, 1});
  CHECK(prefilter_signature(x) == prefilter_signature(group_act(g, x)));
  CHECK_FALSE(prefilter_signature(st("e1100")) == prefilter_signature(st("e1100 + e0011")));
}

TEST_CASE("exhausted limits give unknown") {
  ConjugacyLimits limits;
  limits.groebner.max_pairs = 1;
  const Catalog& cat = Catalog::instance();
  ConjugacyVerdict v = g0_conjugate(cat.nilpotent_orbit(12), cat.nilpotent_orbit(16), limits);
  CHECK(v.answer == Answer::unknown);
}
