#include <doctest.h>

#include "slocc/lie_algebra.hpp"

using namespace slocc;

namespace {

const Algebra& alg() { return Algebra::instance(); }

LieElement h(int factor) { return LieElement::basis(3 * (factor - 1)); }
LieElement odd(const char* bits) { return LieElement::odd(StateVector::basis(bits)); }

}  // namespace

TEST_CASE("basis layout and state vectors") {
  CHECK(kDim == 28);
  CHECK(StateVector::index_of("1111") == 0);
  CHECK(StateVector::index_of("0000") == 15);
  CHECK(StateVector::bits_of(5) == "1010");
  CHECK(cartan(1).to_string() == "e1111 + e0000");
  StateVector v = GR(3) * StateVector::basis("1001") - StateVector::basis("0110");
  CHECK(v.to_string() == "3*e1001 - e0110");
  CHECK_THROWS_AS(StateVector::index_of("10a1"), ParseError);
}

TEST_CASE("Jacobi identity and grading") {
  long checked = 0;
  CHECK(alg().jacobi_violations(&checked) == 0);
  CHECK(checked == 3276);
  CHECK(alg().grading_is_automorphism());
}

TEST_CASE("Cartan subspace is abelian and ad(u1) has integer roots") {
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) CHECK(alg().bracket(LieElement::odd(cartan(p)), LieElement::odd(cartan(q))).is_zero());
  Matrix ad = alg().ad_matrix(cartan(1));
  CHECK((ad * ad).trace() == GR(24));
  UniPoly chi = characteristic_polynomial(ad);
  int zero_mult = 0;
  while (chi.coefficient(zero_mult).is_zero()) ++zero_mult;
  CHECK(zero_mult == 10);
  CHECK(rank(ad) == 18);
}

TEST_CASE("bracket examples") {
  CHECK(alg().bracket(h(1), odd("0000")) == odd("0000"));
  CHECK(alg().bracket(h(1), odd("1000")) == GR(-1) * odd("1000"));
  CHECK(alg().bracket(LieElement::odd(cartan(1)), odd("0011")).is_zero());
  CHECK(alg().bracket(odd("0000"), h(2)) == GR(-1) * odd("0000"));
  auto ad = alg().ad_matrix(StateVector::basis("1100"));
  CHECK(characteristic_polynomial(ad) == UniPoly::monomial(GR(1), 28));
  CHECK(ad.pow(28).is_zero());
}

TEST_CASE("group action") {
  using namespace mat;
  SL2Quad jjjj(J(), J(), J(), J());
  CHECK(group_act(jjjj, cartan(1)) == cartan(1));
  GR a(2);
  SL2Quad g(D(a).inverse(), D(a).inverse(), D(a), D(a));
  StateVector x = cartan_element({GR(1), GR(2), GR(3), GR(0)});
  CHECK(group_act(g, x) == x);
  SL2Quad k(K(), K(), K(), K());
  CHECK(group_act(k, cartan(1)) == cartan(1));
  CHECK_THROWS_AS(SL2Quad(M(GR(2), GR(1)), I(), I(), I()), std::invalid_argument);
  SL2Quad p(D(GR(3), GR(1)), sharp(D(GR(2))), J(), L(GR(5)));
  CHECK(group_act(p * p.inverse(), x) == x);
  CHECK(group_act(p, group_act(g, x)) == group_act(p * g, x));
}

TEST_CASE("group action preserves brackets") {
  using namespace mat;
  SL2Quad g(D(GR(2), GR(1)), J(), L(GR(0, 1)), M(GR::ratio(5, 4), GR::ratio(3, 4)));
  auto act = [&](const LieElement& x) {
    return LieElement(group_act(g, x.even_part()), group_act(g, x.odd_part()));
  };
  std::vector<LieElement> samples{h(1) + odd("0110"), LieElement::basis(4) + GR(3) * odd("1011"),
                                  LieElement::odd(cartan(2)) + LieElement::basis(11), odd("0001")};
  for (const auto& x : samples)
    for (const auto& y : samples) CHECK(act(alg().bracket(x, y)) == alg().bracket(act(x), act(y)));
}

TEST_CASE("permutations act as automorphisms") {
  for (const auto& sigma : all_permutations()) CHECK(alg().is_automorphism(sigma));
  CHECK(sym4_act(transposition(2, 3), cartan(3)) == cartan(4));
  CHECK(sym4_act(transposition(2, 3), cartan(2)) == cartan(2));
  CHECK(sym4_act(transposition(2, 4), cartan(2)) == cartan(4));
  CHECK(sym4_act(transposition(2, 4), cartan(3)) == cartan(3));
  Perm4 s{1, 2, 0, 3}, t{3, 0, 2, 1};
  StateVector v = StateVector::basis("1000") + GR(2) * StateVector::basis("0110");
  Perm4 st;
  for (int k = 0; k < 4; ++k) st[k] = t[s[k]];
  CHECK(sym4_act(s, sym4_act(t, v)) == sym4_act(st, v));
}
