#include <doctest.h>

#include <bit>
#include <random>

#include "slocc/invariants.hpp"
#include "slocc/jordan.hpp"
#include "slocc/weyl.hpp"

using namespace slocc;

namespace {

StateVector e(const char* bits) { return StateVector::basis(bits); }

GR small(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  return GR(Rational(d(rng)), Rational(d(rng)));
}

Mat2 random_sl2(std::mt19937& rng) {
  GR a = small(rng), b = small(rng);
  return Mat2{1, a, 0, 1} * Mat2{1, 0, b, 1};
}

}  // namespace

TEST_CASE("Jordan decomposition examples") {
  CHECK(jordan_decompose(cartan(1)) == JordanPair{cartan(1), StateVector()});
  CHECK(jordan_decompose(e("1100")) == JordanPair{StateVector(), e("1100")});
  CHECK(jordan_decompose(cartan(1) + e("0011")) == JordanPair{cartan(1), e("0011")});
  CHECK(jordan_decompose(StateVector()) == JordanPair{StateVector(), StateVector()});
}

TEST_CASE("Jordan decomposition commutes with the group action") {
  std::mt19937 rng(11);
  StateVector s = cartan(1) - cartan(2);
  StateVector n = e("1101") + e("1110") + e("1000") + e("0100");
  REQUIRE(Algebra::instance().bracket(LieElement::odd(s), LieElement::odd(n)).is_zero());
  for (int trial = 0; trial < 4; ++trial) {
    SL2Quad g(random_sl2(rng), random_sl2(rng), random_sl2(rng), random_sl2(rng));
    auto jp = jordan_decompose(group_act(g, s + n));
    CHECK(jp.s == group_act(g, s));
    CHECK(jp.n == group_act(g, n));
  }
}

TEST_CASE("nilpotency tests") {
  CHECK(is_nilpotent(e("1100")));
  CHECK_FALSE(is_nilpotent(cartan(1)));
  CHECK(is_nilpotent(StateVector()));
  CHECK(is_semisimple(cartan(1)));
  CHECK_FALSE(is_semisimple(e("1100")));
  CHECK_FALSE(is_semisimple(cartan(1) + e("0011")));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 15), count(1, 4);
  int nilpotent = 0;
  for (int trial = 0; trial < 200; ++trial) {
    StateVector x;
    int terms = trial % 2 ? 16 : count(rng);
    for (int k = 0; k < terms; ++k) x[trial % 2 ? k : pick(rng)] = small(rng);
    bool by_ad = is_nilpotent(x);  // throws if the two tests disagree
    nilpotent += by_ad;
    CHECK(by_ad == evaluate_signature(x).is_zero());
  }
  CHECK(nilpotent > 0);
}

TEST_CASE("centraliser dimensions") {
  auto u1 = centralizer(cartan(1));
  CHECK(u1.dim == 10);
  CHECK(u1.dim_even == 3);
  CHECK(u1.dim_odd == 7);
  CHECK(u1.derived_dim == 9);
  for (const auto& b : u1.basis) CHECK(Algebra::instance().bracket(b, LieElement::odd(cartan(1))).is_zero());
  auto generic = centralizer(cartan_element({GR(2), GR(3), GR(4), GR(7)}));
  CHECK(generic.dim == 4);
  CHECK(generic.dim_even == 0);
  CHECK(generic.derived_dim == 0);
  CHECK(centralizer(cartan(1) - cartan(2)).derived_dim == 15);
  auto zero = centralizer(StateVector());
  CHECK(zero.dim == 28);
  CHECK(zero.dim_even == 12);
}

TEST_CASE("centralisers of the semisimple families") {
  const std::array<std::vector<GR>, 11> samples{{{},
                                                 {GR(2), GR(3), GR(4), GR(7)},
                                                 {GR(1), GR(2), GR(4)},
                                                 {GR(1), GR(2)},
                                                 {GR(1), GR(2)},
                                                 {GR(1), GR(2)},
                                                 {GR(1), GR(2)},
                                                 {GR(1)},
                                                 {GR(1)},
                                                 {GR(1)},
                                                 {GR(1)}}};
  const std::array<int, 11> even{0, 0, 1, 3, 2, 2, 2, 6, 6, 6, 3};
  const std::array<int, 11> derived{0, 0, 3, 8, 6, 6, 6, 15, 15, 15, 9};
  for (int label = 1; label <= 10; ++label) {
    CAPTURE(label);
    StateVector s = cartan_element(family_point(label, samples[label]));
    auto info = centralizer(s);
    CHECK(info.dim_even == even[label]);
    CHECK(info.derived_dim == derived[label]);
    CHECK(info.dim_even * 2 == std::popcount(RootSystem::instance().canonical_subsystem(label)));
    CHECK(is_semisimple(s));
  }
}

TEST_CASE("ad rank sequences") {
  CHECK(ad_rank_sequence(StateVector()) == std::vector<int>{0});
  CHECK(ad_rank_sequence(cartan(1)) == std::vector<int>{18});
  auto r = ad_rank_sequence(e("1100"));
  CHECK(r.back() == 0);
}
